#pragma once

#include <string>
#include <vector>

#include "words.hpp"

namespace mvtwin {

// Element of S_n in one-line notation.  apply(x) is the image of x, both
// 1-based.
class Permutation {
public:
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation transposition(int n, int i);  // (i  i+1)

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const;
  bool is_identity() const;

  Permutation inverse() const;

  // Cycle notation, e.g. "(1 2 3)"; the identity renders as "e".
  std::string cycles() const;

  const std::vector<int>& images() const { return img_; }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
  std::vector<int> img_;  // img_[x-1] = image of x
};

// compose(p, q)(x) = p(q(x)); the right factor applies first.
Permutation compose(const Permutation& p, const Permutation& q);

enum class MapKind { Phi, Psi };

std::string map_name(MapKind m);
MapKind map_from_name(const std::string& name);

// Phi sends every s_i and rho_i^a to (i  i+1); Psi sends s_i to the
// identity and rho_i^a to (i  i+1).  Words are evaluated left to right
// with the leftmost letter outermost.
Permutation phi(const Word& w);
Permutation psi(const Word& w);
Permutation quotient_image(const Word& w, MapKind map);

bool in_kernel(const Word& w, MapKind map);

// A section of Phi: a word in rho^0 letters whose phi-image is p, built
// from the insertion-sort factorization of p into adjacent transpositions.
Word section_theta(const Permutation& p, int k = 1);

}  // namespace mvtwin
