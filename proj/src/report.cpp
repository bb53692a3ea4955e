#include "report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "schreier.hpp"

namespace mvtwin {

void Report::add(std::string item, bool ok, std::string detail) {
  results.push_back(ResultItem{std::move(item), ok, std::move(detail)});
  pass = pass && ok;
}

nlohmann::json params_to_json(const RepParams& params) {
  nlohmann::json j;
  j["y"] = nlohmann::json::array();
  for (const Rational& y : params.y) j["y"].push_back(y.str());
  j["z"] = params.z.has_value() ? nlohmann::json(params.z->str()) : nlohmann::json();
  j["a"] = params.a.has_value() ? nlohmann::json(params.a->str()) : nlohmann::json();
  j["b"] = params.b.has_value() ? nlohmann::json(params.b->str()) : nlohmann::json();
  return j;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["task"] = task;
  if (ctx.has_value()) {
    j["ctx"] = {{"n", ctx->n}, {"k", ctx->k}, {"group", family_name(ctx->family)}};
  } else {
    j["ctx"] = nullptr;
  }
  j["family"] = family.has_value() ? nlohmann::json(rep_family_name(*family)) : nlohmann::json();
  j["params"] = params.has_value() ? params_to_json(*params) : nlohmann::json();
  std::vector<ResultItem> sorted = results;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ResultItem& a, const ResultItem& b) { return a.item < b.item; });
  j["results"] = nlohmann::json::array();
  for (const ResultItem& r : sorted) {
    j["results"].push_back({{"item", r.item}, {"pass", r.pass}, {"detail", r.detail}});
  }
  j["pass"] = pass;
  j["seed"] = seed;
  j["tool_version"] = kToolVersion;
  if (!data.is_null()) j["data"] = data;
  return j;
}

ParamConstraint constraint_from_name(const std::string& name) {
  if (name == "none") return ParamConstraint::None;
  if (name == "all-y-equal") return ParamConstraint::AllYEqual;
  if (name == "y-distinct") return ParamConstraint::YDistinct;
  if (name == "zeta8-boundary+") return ParamConstraint::Zeta8BoundaryPlus;
  if (name == "zeta8-boundary-") return ParamConstraint::Zeta8BoundaryMinus;
  if (name == "zeta8-generic") return ParamConstraint::Zeta8Generic;
  throw Error(ErrorCode::Domain, "unknown constraint '" + name + "'");
}

std::string constraint_name(ParamConstraint c) {
  switch (c) {
    case ParamConstraint::None: return "none";
    case ParamConstraint::AllYEqual: return "all-y-equal";
    case ParamConstraint::YDistinct: return "y-distinct";
    case ParamConstraint::Zeta8BoundaryPlus: return "zeta8-boundary+";
    case ParamConstraint::Zeta8BoundaryMinus: return "zeta8-boundary-";
    case ParamConstraint::Zeta8Generic: return "zeta8-generic";
  }
  throw Error(ErrorCode::Internal, "unknown constraint");
}

namespace {

Rational draw_rational(std::mt19937_64& rng) {
  long num = 1 + static_cast<long>(rng() % 50);
  long den = 1 + static_cast<long>(rng() % 50);
  long sign = rng() % 2 == 0 ? 1 : -1;
  return Rational(sign * num, den);
}

}  // namespace

RepParams sample_params(RepFamily family, int k, ParamConstraint constraint,
                        std::uint64_t seed) {
  if (k < 1) throw Error(ErrorCode::Domain, "k must be >= 1");
  bool zeta8_constraint = constraint == ParamConstraint::Zeta8BoundaryPlus ||
                          constraint == ParamConstraint::Zeta8BoundaryMinus ||
                          constraint == ParamConstraint::Zeta8Generic;
  if (zeta8_constraint && family != RepFamily::Z8) {
    throw Error(ErrorCode::Param,
                constraint_name(constraint) + " applies to family z8 only");
  }
  std::mt19937_64 rng(seed);
  RepParams params;
  if (family == RepFamily::Z1) return params;

  bool want_equal = constraint == ParamConstraint::AllYEqual || zeta8_constraint;
  if (want_equal) {
    Rational y = draw_rational(rng);
    params.y.assign(k, y);
  } else if (constraint == ParamConstraint::YDistinct) {
    while (static_cast<int>(params.y.size()) < k) {
      Rational y = draw_rational(rng);
      bool fresh = true;
      for (const Rational& seen : params.y) fresh = fresh && seen != y;
      if (fresh) params.y.push_back(y);
    }
  } else {
    for (int a = 0; a < k; ++a) params.y.push_back(draw_rational(rng));
  }

  if (family == RepFamily::Z6 || family == RepFamily::Z7) {
    params.z = draw_rational(rng);
  }
  if (family == RepFamily::Z8) {
    const Rational one(1);
    const Rational& y = params.y[0];
    switch (constraint) {
      case ParamConstraint::Zeta8BoundaryPlus: {
        Rational a = draw_rational(rng);
        while (a == Rational(-1)) a = draw_rational(rng);
        params.a = a;
        params.b = (one + a) * y;
        break;
      }
      case ParamConstraint::Zeta8BoundaryMinus: {
        Rational a = draw_rational(rng);
        while (a == one) a = draw_rational(rng);
        params.a = a;
        params.b = (one - a) * y;
        break;
      }
      case ParamConstraint::Zeta8Generic: {
        params.a = draw_rational(rng);
        Rational b = draw_rational(rng);
        while (b == (one + *params.a) * y || b == (one - *params.a) * y) {
          b = draw_rational(rng);
        }
        params.b = b;
        break;
      }
      default:
        params.a = draw_rational(rng);
        params.b = draw_rational(rng);
        break;
    }
  }
  return params;
}

namespace {

std::string pad_index(std::size_t index, std::size_t total) {
  std::size_t width = std::to_string(total).size();
  std::string s = std::to_string(index);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

RepParams resolve_params(RepFamily family, int k, const std::optional<RepParams>& given,
                         std::uint64_t seed) {
  if (given.has_value()) return *given;
  return sample_params(family, k, ParamConstraint::None, seed);
}

// Panel of instances used as the operational equality test for group
// elements: agreement of quotient images and of exact matrix images under
// several representative families refutes inequality claims exactly.
std::vector<RepInstance> battery_panel(int n, int k) {
  std::vector<RepInstance> panel;
  RepParams p2;
  for (int a = 0; a < k; ++a) p2.y.push_back(Rational(a + 2));
  panel.push_back(build_rep(RepFamily::Z2, p2, n, k));
  RepParams p6 = p2;
  p6.z = Rational(5, 3);
  panel.push_back(build_rep(RepFamily::Z6, p6, n, k));
  RepParams p8;
  for (int a = 0; a < k; ++a) p8.y.push_back(Rational(2 * a + 3, 2));
  p8.a = Rational(7, 2);
  p8.b = Rational(4, 5);
  panel.push_back(build_rep(RepFamily::Z8, p8, n, k));
  return panel;
}

bool battery_equal(const Word& u, const Word& v, int n, int k) {
  if (phi(u) != phi(v) || psi(u) != psi(v)) return false;
  for (const RepInstance& rep : battery_panel(n, k)) {
    if (eval(rep, u) != eval(rep, v)) return false;
  }
  return true;
}

}  // namespace

Report run_relators(const std::string& group, int n, int k) {
  Report report;
  report.task = "relators";
  Family fam = family_from_name(group);
  report.ctx = GroupCtx{n, k, fam};
  Presentation pres = relators_for(fam, n, k);
  nlohmann::json gens = nlohmann::json::array();
  for (const GenSym& g : pres.generators) gens.push_back(render_sym(g));
  nlohmann::json rels = nlohmann::json::array();
  for (const Word& r : pres.relators) rels.push_back(render_word(r));
  report.data = {{"generators", gens}, {"relators", rels}};
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    report.add("relator " + pad_index(i + 1, pres.relators.size()), true,
               render_word(pres.relators[i]));
  }
  return report;
}

Report run_quotient(const std::string& map, int n, int k, const std::string& word) {
  Report report;
  report.task = "quotient";
  report.ctx = GroupCtx{n, k, Family::MVT};
  MapKind m = map_from_name(map);
  Word w = parse_word(word, *report.ctx);
  Permutation image = quotient_image(w, m);
  bool kernel = image.is_identity();
  report.data = {{"image_cycles", image.cycles()}, {"in_kernel", kernel}};
  report.add("image_cycles", true, image.cycles());
  report.add("in_kernel", true, kernel ? "true" : "false");
  return report;
}

Report run_rep_verify(const std::string& family, const std::vector<int>& ns,
                      const std::vector<int>& ks, const std::optional<RepParams>& params,
                      std::int64_t seed) {
  Report report;
  report.task = "rep verify";
  RepFamily fam = rep_family_from_name(family);
  report.family = fam;
  report.seed = seed;
  if (params.has_value()) report.params = params;
  nlohmann::json grid = nlohmann::json::array();
  for (int n : ns) {
    for (int k : ks) {
      RepParams p = resolve_params(fam, k, params,
                                   static_cast<std::uint64_t>(seed) + 1000u * n + k);
      RepInstance rep = build_rep(fam, p, n, k);
      RelationReport rel = verify_relations(rep);
      std::string failing;
      int failed = 0;
      for (const RelationCheck& c : rel.checks) {
        if (!c.pass) {
          ++failed;
          if (failing.empty()) failing = c.relator;
        }
      }
      std::ostringstream detail;
      if (rel.pass) {
        detail << rel.checks.size() << " relators, all map to the identity";
      } else {
        detail << failed << " of " << rel.checks.size() << " relators fail, first: " << failing;
      }
      report.add(family + " n=" + std::to_string(n) + " k=" + std::to_string(k),
                 rel.pass, detail.str());
      grid.push_back({{"n", n}, {"k", k}, {"params", params_to_json(p)}, {"pass", rel.pass}});
    }
  }
  report.data = {{"grid", grid}};
  if (ns.size() == 1 && ks.size() == 1) {
    report.ctx = GroupCtx{ns[0], ks[0], Family::MVT};
  }
  return report;
}

Report run_rep_system(const std::string& family, int k,
                      const std::optional<RepParams>& params, std::int64_t seed) {
  Report report;
  report.task = "rep system";
  RepFamily fam = rep_family_from_name(family);
  report.family = fam;
  report.seed = seed;
  RepParams p = resolve_params(fam, k, params, static_cast<std::uint64_t>(seed));
  report.params = p;
  Matrix s = rep_s_block(fam, p);
  std::vector<Matrix> rho;
  for (int a = 0; a < k; ++a) rho.push_back(rep_rho_block(fam, p, a));
  SystemReport sys = verify_system_report(s, rho);
  for (const SystemCheck& c : sys.checks) report.add(c.equation, c.pass);
  report.data = {{"s_block", matrix_to_json(s)}};
  return report;
}

Report run_rep_irreducible(const std::string& family, int n, int k,
                           const std::optional<RepParams>& params, std::int64_t seed) {
  Report report;
  report.task = "rep irreducible";
  RepFamily fam = rep_family_from_name(family);
  report.family = fam;
  report.seed = seed;
  report.ctx = GroupCtx{n, k, Family::MVT};
  RepParams p = resolve_params(fam, k, params, static_cast<std::uint64_t>(seed));
  report.params = p;
  RepInstance rep = build_rep(fam, p, n, k);
  std::vector<Matrix> gens;
  for (const auto& [sym, m] : rep.table) gens.push_back(m);
  int dim = algebra_span_dimension(gens);
  bool burnside_irreducible = dim == n * n;
  bool predicted_reducible = thm_reducible(fam, p);
  bool agree = burnside_irreducible == !predicted_reducible;
  std::ostringstream detail;
  detail << "span dimension " << dim << " of " << n * n << "; closed form says "
         << (predicted_reducible ? "reducible" : "irreducible");
  report.add("burnside-vs-closed-form", agree, detail.str());
  report.data = {{"span_dimension", dim},
                 {"burnside_irreducible", burnside_irreducible},
                 {"predicate_reducible", predicted_reducible},
                 {"verdict", burnside_irreducible ? "irreducible" : "reducible"}};
  return report;
}

Report run_rep_witness(const std::string& family, int n, int k,
                       const std::optional<RepParams>& params, std::int64_t seed) {
  Report report;
  report.task = "rep witness";
  RepFamily fam = rep_family_from_name(family);
  report.family = fam;
  report.seed = seed;
  report.ctx = GroupCtx{n, k, Family::MVT};
  RepParams p = resolve_params(fam, k, params, static_cast<std::uint64_t>(seed));
  report.params = p;
  std::vector<Witness> witnesses = faithfulness_witnesses(fam, p, n, k);
  nlohmann::json items = nlohmann::json::array();
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const Witness& w = witnesses[i];
    std::string detail = std::string(w.eval_identity ? "image identity" : "image NOT identity") +
                         ", " + map_name(w.cert_map) + "=" + w.cert_image.cycles();
    report.add("witness " + pad_index(i + 1, witnesses.size()) + ": " + render_word(w.word),
               w.certified(), detail);
    items.push_back({{"word", render_word(w.word)},
                     {"eval_identity", w.eval_identity},
                     {"certificate_map", map_name(w.cert_map)},
                     {"certificate_image", w.cert_image.cycles()}});
  }
  report.data = {{"witnesses", items}};
  return report;
}

Report run_rep_kernel_search(const std::string& family, int n, int k,
                             const std::optional<RepParams>& params, std::int64_t seed,
                             int max_len, long beam) {
  Report report;
  report.task = "rep kernel-search";
  RepFamily fam = rep_family_from_name(family);
  report.family = fam;
  report.seed = seed;
  report.ctx = GroupCtx{n, k, Family::MVT};
  RepParams p = resolve_params(fam, k, params, static_cast<std::uint64_t>(seed));
  report.params = p;
  RepInstance rep = build_rep(fam, p, n, k);
  KernelSearchResult res = kernel_search(rep, max_len, beam);
  nlohmann::json certified = nlohmann::json::array();
  for (const KernelHit& hit : res.certified) {
    certified.push_back({{"word", render_word(hit.word)},
                         {"certificate_map", map_name(hit.cert_map)},
                         {"certificate_image", hit.cert_image.cycles()}});
  }
  nlohmann::json unresolved = nlohmann::json::array();
  for (const Word& w : res.unresolved) unresolved.push_back(render_word(w));
  report.data = {{"words_examined", res.words_examined},
                 {"certified", certified},
                 {"unresolved", unresolved}};
  report.add("kernel search to length " + std::to_string(max_len), true,
             std::to_string(res.certified.size()) + " certified, " +
                 std::to_string(res.unresolved.size()) + " unresolved, " +
                 std::to_string(res.words_examined) + " words examined");
  return report;
}

Report run_rep_mvpt3(int case_id, const Mvpt3Params& params) {
  Report report;
  report.task = "rep mvpt3";
  report.ctx = GroupCtx{3, 2, Family::MVPT};
  std::map<GenSym, Matrix> printed = mvpt3_rep(case_id, params);
  RepInstance source = mvpt3_source_rep(case_id, params);
  report.family = source.family;
  report.params = source.params;
  std::map<GenSym, Matrix> restricted = restrict_rep(source, Family::MVPT);
  nlohmann::json images_json = nlohmann::json::object();
  for (const auto& [sym, m] : printed) {
    auto it = restricted.find(sym);
    bool ok = it != restricted.end() && it->second == m;
    report.add(render_sym(sym), ok,
               ok ? "printed matrix equals restriction" : "printed matrix differs from restriction");
    images_json[render_sym(sym)] = matrix_to_json(m);
  }
  report.data = {{"case", case_id}, {"images", images_json}};
  return report;
}

Report run_subgroup_gens(const std::string& map, int n, int k) {
  Report report;
  report.task = "subgroup gens";
  MapKind m = map_from_name(map);
  SchreierContext sc = build_transversal(n, k, m);
  report.ctx = GroupCtx{n, k, sc.subgroup_family()};
  std::map<GenSym, Word> first_word;
  for (const SchreierGenerator& g : schreier_generators(sc)) {
    first_word.emplace(g.label.sym, g.word);
  }
  nlohmann::json gens = nlohmann::json::array();
  std::size_t index = 0;
  for (const auto& [sym, word] : first_word) {
    Word expansion = expand_generator(sym, n, k);
    bool kernel_ok = in_kernel(expansion, m);
    report.add("generator " + pad_index(++index, first_word.size()) + ": " + render_sym(sym),
               kernel_ok, "expansion " + render_word(expansion));
    gens.push_back({{"label", render_sym(sym)},
                    {"expansion", render_word(expansion)},
                    {"schreier_word", render_word(word)}});
  }
  report.data = {{"generators", gens}};
  return report;
}

Report run_subgroup_relators(const std::string& map, int n, int k) {
  Report report;
  report.task = "subgroup relators";
  MapKind m = map_from_name(map);
  SchreierContext sc = build_transversal(n, k, m);
  report.ctx = GroupCtx{n, k, sc.subgroup_family()};
  SubgroupPresentationResult sub = subgroup_presentation(sc);
  nlohmann::json rels = nlohmann::json::array();
  for (std::size_t i = 0; i < sub.printed.relators.size(); ++i) {
    const Word& r = sub.printed.relators[i];
    // Printed relators must hold as subgroup identities: check the ambient
    // expansion against the battery.
    Word ambient(GroupCtx{n, k, Family::MVT});
    for (const Letter& l : r.letters()) {
      Word e = expand_generator(l.sym, n, k);
      ambient = concat(ambient, l.exp == 1 ? e : invert(e));
    }
    bool ok = in_kernel(ambient, m);
    for (const RepInstance& rep : battery_panel(n, k)) {
      ok = ok && eval(rep, ambient).is_identity();
    }
    report.add("relator " + pad_index(i + 1, sub.printed.relators.size()), ok, render_word(r));
    rels.push_back(render_word(r));
  }
  std::size_t rewritten_ok = 0;
  for (const RewrittenRelatorCheck& c : sub.rewritten_checks) {
    if (c.battery_ok) ++rewritten_ok;
  }
  report.add("rewritten conjugated relators", rewritten_ok == sub.rewritten_checks.size(),
             std::to_string(rewritten_ok) + " of " + std::to_string(sub.rewritten_checks.size()) +
                 " sound under the battery");
  report.data = {{"relators", rels},
                 {"rewritten_checked", sub.rewritten_checks.size()}};
  return report;
}

Report run_subgroup_rewrite(const std::string& map, int n, int k, const std::string& word) {
  Report report;
  report.task = "subgroup rewrite";
  MapKind m = map_from_name(map);
  SchreierContext sc = build_transversal(n, k, m);
  report.ctx = GroupCtx{n, k, sc.subgroup_family()};
  Word w = parse_word(word, GroupCtx{n, k, Family::MVT});
  Word tau = rewrite_tau(sc, w);
  Word back(GroupCtx{n, k, Family::MVT});
  for (const Letter& l : tau.letters()) {
    Word e = expand_generator(l.sym, n, k);
    back = concat(back, l.exp == 1 ? e : invert(e));
  }
  bool sound = battery_equal(w, back, n, k);
  report.add("tau", true, render_word(tau));
  report.add("battery soundness", sound,
             "expansion of the rewritten word matches the input exactly");
  report.data = {{"input", render_word(w)},
                 {"reduced", render_word(free_reduce(w))},
                 {"tau", render_word(tau)}};
  return report;
}

Report run_lemma31(int n, int k, const std::string& conjugator, const std::string& symbol) {
  Report report;
  report.task = "lemma31";
  report.ctx = GroupCtx{n, k, Family::MVPT};
  Word a = parse_word(conjugator, GroupCtx{n, k, Family::MVT});
  Word sym_word = parse_word(symbol, GroupCtx{n, k, Family::MVPT});
  if (sym_word.size() != 1 || sym_word.letters()[0].exp != 1) {
    throw Error(ErrorCode::Param, "--sym must be a single canonical lambda symbol");
  }
  GenSym sym = sym_word.letters()[0].sym;
  GenSym moved = lemma31_action(a, sym);
  // Contract: the expansion of the transported symbol equals a^{-1} (expansion) a.
  Word lhs = expand_generator(moved, n, k);
  Word rhs = concat(concat(invert(a), expand_generator(sym, n, k)), a);
  bool ok = battery_equal(lhs, rhs, n, k);
  report.add("action", ok, render_sym(sym) + " -> " + render_sym(moved));
  report.data = {{"result", render_sym(moved)}};
  return report;
}

Report run_transversal(int n) {
  Report report;
  report.task = "transversal";
  SchreierContext sc = build_transversal(n, 1, MapKind::Phi);
  report.ctx = GroupCtx{n, 1, Family::MVT};
  nlohmann::json entries = nlohmann::json::array();
  std::size_t index = 0;
  for (const Word& t : sc.transversal()) {
    Permutation p = phi(t);
    report.add("entry " + pad_index(++index, sc.transversal().size()), true,
               p.cycles() + " -> " + (t.empty() ? "(empty)" : render_word(t)));
    entries.push_back({{"image", p.cycles()}, {"word", render_word(t)}});
  }
  report.data = {{"entries", entries}};
  return report;
}

}  // namespace mvtwin
