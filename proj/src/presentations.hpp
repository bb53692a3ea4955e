#pragma once

#include <vector>

#include "words.hpp"

namespace mvtwin {

// A finite presentation: each relator is a word equal to the identity,
// stored as left * right^{-1} of the defining relation.
struct Presentation {
  GroupCtx ctx;
  std::vector<GenSym> generators;
  std::vector<Word> relators;
};

// Defining relators of the ambient group on s_i and rho_i^a:
//   (R1) s_i^2
//   (R2) [s_i, s_j]                        |i-j| >= 2
//   (R3) (rho_i^a)^2
//   (R4) [rho_i^a, rho_j^b]                |i-j| >= 2
//   (R5) [rho_i^a, s_j]                    |i-j| >= 2
//   (R6) rho_i^a rho_{i+1}^a rho_i^a   = rho_{i+1}^a rho_i^a rho_{i+1}^a
//   (R7) rho_i^a rho_{i+1}^b rho_i^b   = rho_{i+1}^b rho_i^b rho_{i+1}^a   a < b
//   (R8) rho_i^a rho_{i+1}^a rho_i^b   = rho_{i+1}^b rho_i^a rho_{i+1}^a   a < b
//   (R9) rho_i^a rho_{i+1}^a s_i       = s_{i+1} rho_i^a rho_{i+1}^a
// Enumeration is deterministic: relation families in the order above, index
// tuples lexicographic within each family, commutators emitted in one
// orientation only.
Presentation relators_mvt(int n, int k);

// Pure subgroup presentation on lambda^0_{i,j} (i != j) and lambda^b_{i,j}
// (i < j, b >= 1).  Reversed layer >= 1 symbols arising from the index
// patterns are rewritten to inverses of the canonical ones.
Presentation relators_mvpt(int n, int k);

// Semi-pure subgroup presentation on kappa^0_{i,j} (i != j) and
// kappa^b_{i,j} (i < j, b >= 1).
Presentation relators_mvht(int n, int k);

Presentation relators_for(Family family, int n, int k);

}  // namespace mvtwin
