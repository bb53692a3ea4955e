#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perm.hpp"
#include "presentations.hpp"
#include "words.hpp"

namespace mvtwin {

// Schreier data for the pure (phi-kernel) or semi-pure (psi-kernel)
// subgroup.  The transversal is the set of rho^0 words
//   prod_{m=2..n} t(m, j_m),  1 <= j_m <= m,
// where t(m, l) = rho_{m-1} rho_{m-2} ... rho_l for l < m and the empty
// word for l = m, keyed bijectively by phi-image.
class SchreierContext {
public:
  SchreierContext(GroupCtx ctx, MapKind map, std::vector<Word> transversal);

  const GroupCtx& ctx() const { return ctx_; }
  MapKind map() const { return map_; }
  Family subgroup_family() const {
    return map_ == MapKind::Phi ? Family::MVPT : Family::MVHT;
  }

  const std::vector<Word>& transversal() const { return transversal_; }
  const Word& representative(const Permutation& p) const;

private:
  GroupCtx ctx_;  // ambient context
  MapKind map_;
  std::vector<Word> transversal_;
  std::map<std::vector<int>, std::size_t> by_image_;
};

// Enumerates the transversal for the chosen quotient map.  Desk scale only:
// n > 6 raises ErrorCode::Scale.
SchreierContext build_transversal(int n, int k, MapKind map);

// The transversal word whose quotient image equals that of w.
Word coset_rep(const SchreierContext& sc, const Word& w);

// Label of the Schreier generator s_{t, a} = t a (rep(t a))^{-1}, computed
// from the images of a's strand indices under phi(t):
//   under phi:  a = s_i      -> lambda^0_{p(i+1), p(i)}
//               a = rho_i^b  -> (lambda^b_{p(i), p(i+1)})^{-1}, b >= 1
//   under psi:  a = s_i      -> kappa^0_{p(i), p(i+1)}
//               a = rho_i^b  -> (kappa^b_{p(i), p(i+1)})^{-1},  b >= 1
// with layer >= 1 symbols canonicalized to i < j by flipping the sign.
// Returns nothing when the Schreier generator is trivial (a = rho_i^0).
struct SchreierLabel {
  GenSym sym;
  int sign = 1;
};
std::optional<SchreierLabel> schreier_label(const SchreierContext& sc,
                                            const Word& transversal_word,
                                            const GenSym& a);

struct SchreierGenerator {
  SchreierLabel label;
  Word word;  // freely reduced t a (rep(t a))^{-1}
};

// All nontrivial Schreier generators over (transversal element, ambient
// generator) pairs in enumeration order.
std::vector<SchreierGenerator> schreier_generators(const SchreierContext& sc);

// The printed ambient word for a subgroup generator: base cases
//   lambda^0_{i,i+1} = rho_i s_i        lambda^0_{i+1,i} = s_i rho_i
//   lambda^b_{i,i+1} = rho_i rho_i^b    (b >= 1)
//   kappa^0_{i,i+1}  = s_i              kappa^0_{i+1,i}  = rho_i s_i rho_i
//   kappa^b_{i,i+1}  = rho_i rho_i^b
// conjugated to (i, j) by rho_{j-1} ... rho_{i+1} on the left and its
// reverse on the right.  A reversed layer >= 1 symbol denotes the inverse
// of the canonical one.  The result is checked to lie in the kernel.
Word expand_generator(const GenSym& sym, int n, int k);

// The rewriting process: expresses a kernel word as a product of labeled
// Schreier generators, the j-th letter labeled at the representative of the
// preceding initial segment (following segment for inverse letters).
// Trivially-labeled letters contribute nothing.  The output is reduced with
// the subgroup identities lambda^0_{j,i} = (lambda^0_{i,j})^{-1} and
// (kappa^0_{i,j})^2 = 1 in addition to free cancellation.
Word rewrite_tau(const SchreierContext& sc, const Word& w);

// Lemma: conjugation of a lambda generator by a rho^0 word transports both
// strand indices by the word's transpositions applied left to right.  The
// returned symbol may be a reversed layer >= 1 symbol; it denotes the
// inverse of the canonical generator.
GenSym lemma31_action(const Word& a, const GenSym& sym);

struct RewrittenRelatorCheck {
  std::string conjugator;
  std::string ambient_relator;
  std::string rewritten;
  bool battery_ok = false;
};

struct SubgroupPresentationResult {
  Presentation printed;  // generators and printed relators
  std::vector<SchreierGenerator> generators;  // deduplicated by label
  std::vector<RewrittenRelatorCheck> rewritten_checks;
  bool pass = true;
};

// Assembles the subgroup presentation: deduplicated Schreier generators with
// their printed expansions, the printed relator list, and soundness checks
// of tau on every conjugated ambient relator against a panel of
// representation instances and the quotient maps.  n > 5 raises
// ErrorCode::Scale.
SubgroupPresentationResult subgroup_presentation(const SchreierContext& sc);

}  // namespace mvtwin
