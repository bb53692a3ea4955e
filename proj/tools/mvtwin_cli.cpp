// Command-line front end for the mvtwin shared library.  Subcommands parse
// their flags here and delegate to the C API; reports are printed to stdout
// as JSON.  Exit codes: 0 when the report passes, 1 when it fails, 2 on
// usage errors, 3 on domain or scale errors.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvtwin/mvtwin.h"

namespace {

int exit_code_for(mvtwin_status status) {
  switch (status) {
    case MVTWIN_OK:
      return 0;
    case MVTWIN_ERR_PARSE:
    case MVTWIN_ERR_USAGE:
      return 2;
    default:
      return 3;
  }
}

struct StringOut {
  char* value = nullptr;
  ~StringOut() { mvtwin_free_string(value); }
};

// Prints the report, propagating its pass flag into the exit code.
int finish(mvtwin_status status, StringOut& out, bool json_mode = true,
           const std::string& text_key = "") {
  if (status != MVTWIN_OK) {
    std::fprintf(stderr, "error: %s\n", mvtwin_last_error());
    return exit_code_for(status);
  }
  std::string payload(out.value ? out.value : "");
  if (!json_mode && !text_key.empty()) {
    auto j = nlohmann::json::parse(payload);
    for (const auto& g : j["data"]["generators"]) {
      std::printf("gen %s\n", g.get<std::string>().c_str());
    }
    for (const auto& r : j["data"][text_key]) {
      std::printf("rel %s\n", r.get<std::string>().c_str());
    }
    return j["pass"].get<bool>() ? 0 : 1;
  }
  std::fputs(payload.c_str(), stdout);
  auto j = nlohmann::json::parse(payload);
  return j["pass"].get<bool>() ? 0 : 1;
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact presentations, quotients and matrix representations of "
               "multi-virtual twin groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mvtwin_version()));

  std::string group = "mvt", map = "phi", family = "z2", word, y_csv, z, a, b, sym;
  std::string n_list = "3", k_list = "1";
  int n = 3, k = 1, max_len = 8, case_id = 1, eps = 1, delta = 1, sign = 1;
  long long seed = 0;
  long beam = 200000;
  bool json_mode = false;

  auto* relators = app.add_subcommand("relators", "Print defining generators and relators");
  relators->add_option("--group", group, "mvt, mvpt or mvht");
  relators->add_option("--n", n)->required();
  relators->add_option("--k", k)->required();
  relators->add_flag("--json", json_mode, "emit the JSON report");

  auto* quotient = app.add_subcommand("quotient", "Image of a word under phi or psi");
  quotient->add_option("--map", map, "phi or psi");
  quotient->add_option("--n", n)->required();
  quotient->add_option("--k", k)->required();
  quotient->add_option("--word", word)->required();

  auto* rep = app.add_subcommand("rep", "Representation tasks");
  rep->require_subcommand(1);
  auto add_rep_params = [&](CLI::App* cmd) {
    cmd->add_option("--y", y_csv, "comma list of rationals, one per layer");
    cmd->add_option("--z", z);
    cmd->add_option("--a", a);
    cmd->add_option("--b", b);
    cmd->add_option("--seed", seed);
  };
  auto* rep_verify = rep->add_subcommand("verify", "Check all defining relators");
  rep_verify->add_option("--family", family)->required();
  rep_verify->add_option("--n", n_list, "n or comma list for grid runs")->required();
  rep_verify->add_option("--k", k_list, "k or comma list for grid runs")->required();
  add_rep_params(rep_verify);

  auto* rep_system = rep->add_subcommand("system", "Check the block equation system");
  rep_system->add_option("--family", family)->required();
  rep_system->add_option("--k", k)->required();
  add_rep_params(rep_system);

  auto* rep_irr = rep->add_subcommand("irreducible", "Burnside verdict vs closed form");
  rep_irr->add_option("--family", family)->required();
  rep_irr->add_option("--n", n)->required();
  rep_irr->add_option("--k", k)->required();
  add_rep_params(rep_irr);

  auto* rep_wit = rep->add_subcommand("witness", "Unfaithfulness witnesses");
  rep_wit->add_option("--family", family)->required();
  rep_wit->add_option("--n", n)->required();
  rep_wit->add_option("--k", k)->required();
  add_rep_params(rep_wit);

  auto* rep_ks = rep->add_subcommand("kernel-search", "Bounded search for kernel words");
  rep_ks->add_option("--family", family)->required();
  rep_ks->add_option("--n", n)->required();
  rep_ks->add_option("--k", k)->required();
  rep_ks->add_option("--max-len", max_len);
  rep_ks->add_option("--beam", beam);
  add_rep_params(rep_ks);

  auto* rep_mvpt3 = rep->add_subcommand("mvpt3", "Induced pure-subgroup images at n=3, k=2");
  std::string y0, y1, m_z, m_a, m_b;
  rep_mvpt3->add_option("--case", case_id, "1, 2 or 3")->required();
  rep_mvpt3->add_option("--y0", y0)->required();
  rep_mvpt3->add_option("--y1", y1)->required();
  rep_mvpt3->add_option("--eps", eps, "case 1 sign");
  rep_mvpt3->add_option("--delta", delta, "case 1 sign");
  rep_mvpt3->add_option("--sign", sign, "case 2: +1 from z6, -1 from z7");
  rep_mvpt3->add_option("--z", m_z, "case 2 parameter");
  rep_mvpt3->add_option("--a", m_a, "case 3 parameter");
  rep_mvpt3->add_option("--b", m_b, "case 3 parameter");

  auto* subgroup = app.add_subcommand("subgroup", "Schreier subgroup machinery");
  subgroup->require_subcommand(1);
  auto* sub_gens = subgroup->add_subcommand("gens", "Schreier generators with expansions");
  sub_gens->add_option("--map", map)->required();
  sub_gens->add_option("--n", n)->required();
  sub_gens->add_option("--k", k)->required();
  auto* sub_rel = subgroup->add_subcommand("relators", "Printed relators plus rewriting checks");
  sub_rel->add_option("--map", map)->required();
  sub_rel->add_option("--n", n)->required();
  sub_rel->add_option("--k", k)->required();
  auto* sub_rw = subgroup->add_subcommand("rewrite", "Rewrite a kernel word");
  sub_rw->add_option("--map", map)->required();
  sub_rw->add_option("--n", n)->required();
  sub_rw->add_option("--k", k)->required();
  sub_rw->add_option("--word", word)->required();

  auto* lemma31 = app.add_subcommand("lemma31", "Conjugation action on a lambda generator");
  lemma31->add_option("--n", n)->required();
  lemma31->add_option("--k", k)->required();
  lemma31->add_option("--a", word, "conjugating rho^0 word")->required();
  lemma31->add_option("--sym", sym, "lambda symbol, e.g. L1.2.0")->required();

  auto* transversal = app.add_subcommand("transversal", "Coset representatives");
  transversal->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  StringOut out;
  if (relators->parsed()) {
    mvtwin_status s = mvtwin_run_relators(group.c_str(), n, k, &out.value);
    return finish(s, out, json_mode, "relators");
  }
  if (quotient->parsed()) {
    return finish(mvtwin_run_quotient(map.c_str(), n, k, word.c_str(), &out.value), out);
  }
  if (rep_verify->parsed()) {
    return finish(mvtwin_run_rep_verify(family.c_str(), n_list.c_str(), k_list.c_str(),
                                        opt(y_csv), opt(z), opt(a), opt(b), seed, &out.value),
                  out);
  }
  if (rep_system->parsed()) {
    return finish(mvtwin_run_rep_system(family.c_str(), k, opt(y_csv), opt(z), opt(a),
                                        opt(b), seed, &out.value),
                  out);
  }
  if (rep_irr->parsed()) {
    return finish(mvtwin_run_rep_irreducible(family.c_str(), n, k, opt(y_csv), opt(z),
                                             opt(a), opt(b), seed, &out.value),
                  out);
  }
  if (rep_wit->parsed()) {
    return finish(mvtwin_run_rep_witness(family.c_str(), n, k, opt(y_csv), opt(z), opt(a),
                                         opt(b), seed, &out.value),
                  out);
  }
  if (rep_ks->parsed()) {
    return finish(mvtwin_run_rep_kernel_search(family.c_str(), n, k, opt(y_csv), opt(z),
                                               opt(a), opt(b), seed, max_len, beam,
                                               &out.value),
                  out);
  }
  if (rep_mvpt3->parsed()) {
    return finish(mvtwin_run_rep_mvpt3(case_id, y0.c_str(), y1.c_str(), eps, delta, sign,
                                       opt(m_z), opt(m_a), opt(m_b), &out.value),
                  out);
  }
  if (sub_gens->parsed()) {
    return finish(mvtwin_run_subgroup_gens(map.c_str(), n, k, &out.value), out);
  }
  if (sub_rel->parsed()) {
    return finish(mvtwin_run_subgroup_relators(map.c_str(), n, k, &out.value), out);
  }
  if (sub_rw->parsed()) {
    return finish(mvtwin_run_subgroup_rewrite(map.c_str(), n, k, word.c_str(), &out.value),
                  out);
  }
  if (lemma31->parsed()) {
    return finish(mvtwin_run_lemma31(n, k, word.c_str(), sym.c_str(), &out.value), out);
  }
  if (transversal->parsed()) {
    return finish(mvtwin_run_transversal(n, &out.value), out);
  }
  return 2;
}
