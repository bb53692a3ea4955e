#include "mvtwin/mvtwin.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "report.hpp"
#include "reps.hpp"
#include "words.hpp"

using namespace mvtwin;

struct mvtwin_word {
  Word value;
};

struct mvtwin_rep {
  RepInstance value;
};

namespace {

thread_local std::string g_last_error;

mvtwin_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return MVTWIN_ERR_PARSE;
    case ErrorCode::Index: return MVTWIN_ERR_INDEX;
    case ErrorCode::Context: return MVTWIN_ERR_CONTEXT;
    case ErrorCode::Alphabet: return MVTWIN_ERR_ALPHABET;
    case ErrorCode::Domain: return MVTWIN_ERR_DOMAIN;
    case ErrorCode::Scale: return MVTWIN_ERR_SCALE;
    case ErrorCode::Singular: return MVTWIN_ERR_SINGULAR;
    case ErrorCode::Kernel: return MVTWIN_ERR_KERNEL;
    case ErrorCode::Param: return MVTWIN_ERR_PARAM;
    case ErrorCode::NotApplicable: return MVTWIN_ERR_NOT_APPLICABLE;
    case ErrorCode::Internal: return MVTWIN_ERR_INTERNAL;
  }
  return MVTWIN_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
mvtwin_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MVTWIN_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MVTWIN_ERR_INTERNAL;
  }
}

mvtwin_status require(bool cond, const char* what) {
  if (cond) return MVTWIN_OK;
  g_last_error = what;
  return MVTWIN_ERR_USAGE;
}

std::vector<int> parse_int_csv(const char* csv, const char* what) {
  std::vector<int> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, std::string("bad integer in ") + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::Parse, std::string("empty list for ") + what);
  return out;
}

std::optional<RepParams> parse_params(const char* y_csv, const char* z, const char* a,
                                      const char* b) {
  if (!y_csv && !z && !a && !b) return std::nullopt;
  RepParams params;
  if (y_csv) {
    std::stringstream in(y_csv);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) params.y.push_back(Rational::parse(item));
    }
  }
  if (z) params.z = Rational::parse(z);
  if (a) params.a = Rational::parse(a);
  if (b) params.b = Rational::parse(b);
  return params;
}

}  // namespace

extern "C" {

const char* mvtwin_version(void) { return kToolVersion; }

const char* mvtwin_last_error(void) { return g_last_error.c_str(); }

void mvtwin_free_string(char* s) { std::free(s); }

mvtwin_status mvtwin_word_parse(int n, int k, const char* group, const char* text,
                                mvtwin_word** out) {
  if (mvtwin_status s = require(group && text && out, "null argument")) return s;
  return guarded([&] {
    GroupCtx ctx{n, k, family_from_name(group)};
    *out = new mvtwin_word{parse_word(text, ctx)};
  });
}

mvtwin_status mvtwin_word_render(const mvtwin_word* w, char** out) {
  if (mvtwin_status s = require(w && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(render_word(w->value)); });
}

mvtwin_status mvtwin_word_reduce(const mvtwin_word* w, mvtwin_word** out) {
  if (mvtwin_status s = require(w && out, "null argument")) return s;
  return guarded([&] { *out = new mvtwin_word{free_reduce(w->value)}; });
}

mvtwin_status mvtwin_word_concat(const mvtwin_word* u, const mvtwin_word* v,
                                 mvtwin_word** out) {
  if (mvtwin_status s = require(u && v && out, "null argument")) return s;
  return guarded([&] { *out = new mvtwin_word{concat(u->value, v->value)}; });
}

mvtwin_status mvtwin_word_invert(const mvtwin_word* w, mvtwin_word** out) {
  if (mvtwin_status s = require(w && out, "null argument")) return s;
  return guarded([&] { *out = new mvtwin_word{invert(w->value)}; });
}

void mvtwin_word_free(mvtwin_word* w) { delete w; }

mvtwin_status mvtwin_rep_build(const char* family, int n, int k, const char* y_csv,
                               const char* z, const char* a, const char* b,
                               mvtwin_rep** out) {
  if (mvtwin_status s = require(family && out, "null argument")) return s;
  return guarded([&] {
    RepParams params = parse_params(y_csv, z, a, b).value_or(RepParams{});
    *out = new mvtwin_rep{build_rep(rep_family_from_name(family), params, n, k)};
  });
}

mvtwin_status mvtwin_rep_eval(const mvtwin_rep* rep, const mvtwin_word* w, char** out_json) {
  if (mvtwin_status s = require(rep && w && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(matrix_to_json(eval(rep->value, w->value)).dump());
  });
}

void mvtwin_rep_free(mvtwin_rep* rep) { delete rep; }

mvtwin_status mvtwin_run_relators(const char* group, int n, int k, char** out_json) {
  if (mvtwin_status s = require(group && out_json, "null argument")) return s;
  return guarded([&] { *out_json = dup_string(run_relators(group, n, k).to_string()); });
}

mvtwin_status mvtwin_run_quotient(const char* map, int n, int k, const char* word,
                                  char** out_json) {
  if (mvtwin_status s = require(map && word && out_json, "null argument")) return s;
  return guarded([&] { *out_json = dup_string(run_quotient(map, n, k, word).to_string()); });
}

mvtwin_status mvtwin_run_rep_verify(const char* family, const char* n_csv,
                                    const char* k_csv, const char* y_csv, const char* z,
                                    const char* a, const char* b, long long seed,
                                    char** out_json) {
  if (mvtwin_status s = require(family && n_csv && k_csv && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(run_rep_verify(family, parse_int_csv(n_csv, "--n"),
                                          parse_int_csv(k_csv, "--k"),
                                          parse_params(y_csv, z, a, b), seed)
                               .to_string());
  });
}

mvtwin_status mvtwin_run_rep_system(const char* family, int k, const char* y_csv,
                                    const char* z, const char* a, const char* b,
                                    long long seed, char** out_json) {
  if (mvtwin_status s = require(family && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json =
        dup_string(run_rep_system(family, k, parse_params(y_csv, z, a, b), seed).to_string());
  });
}

mvtwin_status mvtwin_run_rep_irreducible(const char* family, int n, int k,
                                         const char* y_csv, const char* z, const char* a,
                                         const char* b, long long seed, char** out_json) {
  if (mvtwin_status s = require(family && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(
        run_rep_irreducible(family, n, k, parse_params(y_csv, z, a, b), seed).to_string());
  });
}

mvtwin_status mvtwin_run_rep_witness(const char* family, int n, int k, const char* y_csv,
                                     const char* z, const char* a, const char* b,
                                     long long seed, char** out_json) {
  if (mvtwin_status s = require(family && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(
        run_rep_witness(family, n, k, parse_params(y_csv, z, a, b), seed).to_string());
  });
}

mvtwin_status mvtwin_run_rep_kernel_search(const char* family, int n, int k,
                                           const char* y_csv, const char* z, const char* a,
                                           const char* b, long long seed, int max_len,
                                           long beam, char** out_json) {
  if (mvtwin_status s = require(family && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(run_rep_kernel_search(family, n, k, parse_params(y_csv, z, a, b),
                                                 seed, max_len, beam)
                               .to_string());
  });
}

mvtwin_status mvtwin_run_rep_mvpt3(int case_id, const char* y0, const char* y1, int eps,
                                   int delta, int sign, const char* z, const char* a,
                                   const char* b, char** out_json) {
  if (mvtwin_status s = require(y0 && y1 && out_json, "null argument")) return s;
  return guarded([&] {
    Mvpt3Params params{Rational::parse(y0), Rational::parse(y1)};
    params.eps = eps;
    params.delta = delta;
    params.sign = sign;
    if (z) params.z = Rational::parse(z);
    if (a) params.a = Rational::parse(a);
    if (b) params.b = Rational::parse(b);
    *out_json = dup_string(run_rep_mvpt3(case_id, params).to_string());
  });
}

mvtwin_status mvtwin_run_subgroup_gens(const char* map, int n, int k, char** out_json) {
  if (mvtwin_status s = require(map && out_json, "null argument")) return s;
  return guarded([&] { *out_json = dup_string(run_subgroup_gens(map, n, k).to_string()); });
}

mvtwin_status mvtwin_run_subgroup_relators(const char* map, int n, int k, char** out_json) {
  if (mvtwin_status s = require(map && out_json, "null argument")) return s;
  return guarded([&] { *out_json = dup_string(run_subgroup_relators(map, n, k).to_string()); });
}

mvtwin_status mvtwin_run_subgroup_rewrite(const char* map, int n, int k, const char* word,
                                          char** out_json) {
  if (mvtwin_status s = require(map && word && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(run_subgroup_rewrite(map, n, k, word).to_string());
  });
}

mvtwin_status mvtwin_run_lemma31(int n, int k, const char* conjugator, const char* symbol,
                                 char** out_json) {
  if (mvtwin_status s = require(conjugator && symbol && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(run_lemma31(n, k, conjugator, symbol).to_string());
  });
}

mvtwin_status mvtwin_run_transversal(int n, char** out_json) {
  if (mvtwin_status s = require(out_json != nullptr, "null argument")) return s;
  return guarded([&] { *out_json = dup_string(run_transversal(n).to_string()); });
}

mvtwin_status mvtwin_sample_params(const char* family, int k, const char* constraint,
                                   long long seed, char** out_json) {
  if (mvtwin_status s = require(family && constraint && out_json, "null argument")) return s;
  return guarded([&] {
    RepParams params = sample_params(rep_family_from_name(family), k,
                                     constraint_from_name(constraint),
                                     static_cast<std::uint64_t>(seed));
    *out_json = dup_string(params_to_json(params).dump(2) + "\n");
  });
}

}  // extern "C"
