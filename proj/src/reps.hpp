#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"
#include "perm.hpp"
#include "presentations.hpp"
#include "words.hpp"

namespace mvtwin {

// The eight homogeneous 2-local families.  Every family except Z1 sends
// rho_i^a to the antidiagonal block (0, 1/y_a; y_a, 0) at rows (i, i+1);
// the s-blocks are:
//   Z1  identity (and identity rho-blocks)     Z5  (-1  0; 0 -1)
//   Z2  ( 1  0; 0  1)                          Z6  ( 1  z; 0 -1)
//   Z3  ( 1  0; 0 -1)                          Z7  (-1  z; 0  1)
//   Z4  (-1  0; 0  1)                          Z8  (-a  -(a^2-1)/b; b  a)
enum class RepFamily { Z1, Z2, Z3, Z4, Z5, Z6, Z7, Z8 };

std::string rep_family_name(RepFamily f);
RepFamily rep_family_from_name(const std::string& name);

struct RepParams {
  std::vector<Rational> y;  // one value per layer; unused by Z1
  std::optional<Rational> z;  // Z6, Z7
  std::optional<Rational> a;  // Z8
  std::optional<Rational> b;  // Z8
};

struct RepInstance {
  RepFamily family = RepFamily::Z1;
  GroupCtx ctx;
  RepParams params;
  std::map<GenSym, Matrix> table;
};

// 2x2 blocks for one family; layer selects y_alpha for the rho block.
Matrix rep_s_block(RepFamily family, const RepParams& params);
Matrix rep_rho_block(RepFamily family, const RepParams& params, int layer);

// Instantiates the family at (n, k): every generator image is the family
// block embedded at rows/columns (i, i+1) of the n x n identity.
// Requires n >= 3 and complete nonzero parameters for the family.
RepInstance build_rep(RepFamily family, const RepParams& params, int n, int k);

// Product of generator images left to right; inverse letters use the exact
// matrix inverse.
Matrix eval(const RepInstance& rep, const Word& w);

// Evaluates a subgroup word against an explicit generator table.
Matrix eval_table(const std::map<GenSym, Matrix>& table, int n, const Word& w);

struct RelationCheck {
  std::string relator;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool pass = true;
};

// Evaluates every defining relator of the ambient group; pass means the
// image is exactly the identity matrix.
RelationReport verify_relations(const RepInstance& rep);

struct SystemCheck {
  std::string equation;  // block label plus layer(s), e.g. "B2[b=1]"
  bool pass = false;
};

struct SystemReport {
  std::vector<SystemCheck> checks;
  bool pass = true;
};

// Substitutes the family blocks into the defining equation system for
// 2-local representation candidates and checks every instance exactly.
// t,u,v,w name the s-block entries and (w_a, x_a, y_a, z_a) the rho-block
// entries of layer a.
SystemReport verify_system_report(const Matrix& s_block, const std::vector<Matrix>& rho_blocks);
bool verify_system(RepFamily family, const RepParams& params, int k);

struct Witness {
  Word word;
  bool eval_identity = false;
  MapKind cert_map = MapKind::Phi;
  Permutation cert_image;
  bool certified() const { return eval_identity && !cert_image.is_identity(); }
};

// Kernel elements witnessing unfaithfulness, with quotient certificates:
//   Z1, Z2        s_i
//   Z3, Z4, Z5    s_i s_{i+1} s_i s_{i+1}
//   Z6            (s_i rho_{i+1}^a)^4
//   Z7            (s_{i+1} rho_i^a)^4
//   Z8, a = -1    (s_i rho_{i+1}^a)^4
//   Z8, a =  0    (s_i rho_{i+1}^a)^3
//   Z8, a = +1    (s_{i+1} rho_i^a)^4
// Certificates prefer phi and fall back to psi.  Z8 outside a in {-1,0,1}
// raises ErrorCode::NotApplicable.
std::vector<Witness> faithfulness_witnesses(RepFamily family, const RepParams& params,
                                            int n, int k);

// Closed-form reducibility verdict:
//   Z1 reducible; Z2..Z5 reducible iff all y_a equal; Z6, Z7 irreducible;
//   Z8 reducible iff all y_a equal (= y) and b/y = 1+a or b/y = 1-a.
bool thm_reducible(RepFamily family, const RepParams& params);

// True iff every image differs from the identity only in the 2x2 block at
// rows (i, i+1) for its strand index, all s-blocks agree, and all rho-blocks
// agree per layer.
bool is_2local(const std::map<GenSym, Matrix>& table, int n, int k);
bool is_2local(const RepInstance& rep);

// The three induced representation families of the pure subgroup at
// (n, k) = (3, 2), returning images of the six symbols
// lambda^0_{12}, lambda^0_{23}, lambda^0_{13}, lambda^1_{12},
// lambda^1_{23}, lambda^1_{13}.
//   case 1: signs eps, delta in {-1, +1} with y0, y1     (diagonal s-block)
//   case 2: sign in {-1, +1} selecting Z6 or Z7, z, y0, y1
//   case 3: a, b, y0, y1                                 (Z8-induced)
struct Mvpt3Params {
  Rational y0, y1;
  int eps = 1, delta = 1;  // case 1
  int sign = 1;            // case 2: +1 from Z6, -1 from Z7
  Rational z;              // case 2
  Rational a, b;           // case 3
};
std::map<GenSym, Matrix> mvpt3_rep(int case_id, const Mvpt3Params& params);

// The ambient instance whose restriction induces mvpt3_rep(case_id, params).
RepInstance mvpt3_source_rep(int case_id, const Mvpt3Params& params);

// Images of every subgroup generator under eval of its ambient expansion.
std::map<GenSym, Matrix> restrict_rep(const RepInstance& rep, Family subgroup);

struct KernelHit {
  Word word;
  bool certified = false;  // nontrivial phi or psi image
  MapKind cert_map = MapKind::Phi;
  Permutation cert_image;
};

// Bounded breadth-first search over reduced ambient words for kernel
// elements of the representation.  Certified hits carry a nontrivial
// quotient image; hits whose phi- and psi-images are both trivial are
// reported as unresolved.
struct KernelSearchResult {
  std::vector<KernelHit> certified;
  std::vector<Word> unresolved;
  long words_examined = 0;
};
KernelSearchResult kernel_search(const RepInstance& rep, int max_len, long beam = 200000);

}  // namespace mvtwin
