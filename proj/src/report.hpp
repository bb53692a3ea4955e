#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reps.hpp"
#include "words.hpp"

namespace mvtwin {

inline constexpr const char* kToolVersion = "0.1.0";

struct ResultItem {
  std::string item;
  bool pass = true;
  std::string detail;
};

// The JSON report emitted by every task.  pass is the conjunction of the
// item passes; rationals are serialized as "num/den" strings.  Items are
// sorted by key so that report assembly is order independent.
struct Report {
  std::string task;
  std::optional<GroupCtx> ctx;
  std::optional<RepFamily> family;
  std::optional<RepParams> params;
  std::vector<ResultItem> results;
  bool pass = true;
  std::int64_t seed = 0;
  nlohmann::json data;  // task-specific payload

  void add(std::string item, bool ok, std::string detail = "");
  nlohmann::json to_json() const;
  std::string to_string() const { return to_json().dump(2) + "\n"; }
};

nlohmann::json params_to_json(const RepParams& params);
nlohmann::json matrix_to_json(const Matrix& m);

enum class ParamConstraint {
  None,
  AllYEqual,
  YDistinct,
  Zeta8BoundaryPlus,
  Zeta8BoundaryMinus,
  Zeta8Generic,
};

ParamConstraint constraint_from_name(const std::string& name);
std::string constraint_name(ParamConstraint c);

// Deterministic parameter sampling: numerators and denominators uniform in
// [1, 50] with uniform sign, rejecting zero values and constraint
// violations.  For the boundary constraints b is (1 -+ a) y exactly.
RepParams sample_params(RepFamily family, int k, ParamConstraint constraint,
                        std::uint64_t seed);

// Task runners behind the CLI subcommands.
Report run_relators(const std::string& group, int n, int k);
Report run_quotient(const std::string& map, int n, int k, const std::string& word);
Report run_rep_verify(const std::string& family, const std::vector<int>& ns,
                      const std::vector<int>& ks, const std::optional<RepParams>& params,
                      std::int64_t seed);
Report run_rep_system(const std::string& family, int k,
                      const std::optional<RepParams>& params, std::int64_t seed);
Report run_rep_irreducible(const std::string& family, int n, int k,
                           const std::optional<RepParams>& params, std::int64_t seed);
Report run_rep_witness(const std::string& family, int n, int k,
                       const std::optional<RepParams>& params, std::int64_t seed);
Report run_rep_kernel_search(const std::string& family, int n, int k,
                             const std::optional<RepParams>& params, std::int64_t seed,
                             int max_len, long beam);
Report run_rep_mvpt3(int case_id, const Mvpt3Params& params);
Report run_subgroup_gens(const std::string& map, int n, int k);
Report run_subgroup_relators(const std::string& map, int n, int k);
Report run_subgroup_rewrite(const std::string& map, int n, int k, const std::string& word);
Report run_lemma31(int n, int k, const std::string& conjugator, const std::string& symbol);
Report run_transversal(int n);

}  // namespace mvtwin
