#include "perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mvtwin {

Permutation::Permutation(int n) {
  if (n < 1) throw Error(ErrorCode::Domain, "permutation degree must be >= 1");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1]) {
      throw Error(ErrorCode::Domain, "images are not a bijection of {1..n}");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i + 1 > n) {
    throw Error(ErrorCode::Index, "transposition (i i+1) out of range");
  }
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

int Permutation::apply(int x) const {
  if (x < 1 || x > degree()) {
    throw Error(ErrorCode::Index, "point out of range");
  }
  return img_[x - 1];
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x) {
    if (img_[x - 1] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int x = 1; x <= degree(); ++x) inv[img_[x - 1] - 1] = x;
  return Permutation(std::move(inv));
}

std::string Permutation::cycles() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1] || img_[start - 1] == start) continue;
    any = true;
    os << '(';
    int x = start;
    bool first = true;
    while (!seen[x - 1]) {
      seen[x - 1] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = img_[x - 1];
    }
    os << ')';
  }
  return any ? os.str() : "e";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorCode::Domain, "cannot compose permutations of different degree");
  }
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[x - 1] = p.apply(q.apply(x));
  return Permutation(std::move(img));
}

std::string map_name(MapKind m) { return m == MapKind::Phi ? "phi" : "psi"; }

MapKind map_from_name(const std::string& name) {
  if (name == "phi") return MapKind::Phi;
  if (name == "psi") return MapKind::Psi;
  throw Error(ErrorCode::Domain, "unknown quotient map '" + name + "'");
}

namespace {

Permutation quotient(const Word& w, bool s_acts) {
  if (w.ctx().family != Family::MVT) {
    throw Error(ErrorCode::Alphabet, "quotient maps are defined on ambient words only");
  }
  const int n = w.ctx().n;
  Permutation acc(n);
  for (const Letter& l : w.letters()) {
    if (l.sym.kind == SymKind::S && !s_acts) continue;
    acc = compose(acc, Permutation::transposition(n, l.sym.i));
  }
  return acc;
}

}  // namespace

Permutation phi(const Word& w) { return quotient(w, true); }
Permutation psi(const Word& w) { return quotient(w, false); }

Permutation quotient_image(const Word& w, MapKind map) {
  return map == MapKind::Phi ? phi(w) : psi(w);
}

bool in_kernel(const Word& w, MapKind map) {
  return quotient_image(w, map).is_identity();
}

Word section_theta(const Permutation& p, int k) {
  const int n = p.degree();
  if (n < 2) return Word(GroupCtx{2, std::max(k, 1), Family::MVT});
  std::vector<int> arr = p.images();
  std::vector<int> swaps;
  for (int t = 1; t < n; ++t) {
    for (int pos = t; pos >= 1 && arr[pos - 1] > arr[pos]; --pos) {
      std::swap(arr[pos - 1], arr[pos]);
      swaps.push_back(pos);
    }
  }
  // Sorting multiplies p on the right by each recorded transposition, so p
  // is the recorded product reversed.
  Word w(GroupCtx{n, std::max(k, 1), Family::MVT});
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    w.push(sym_rho(*it, 0));
  }
  return w;
}

}  // namespace mvtwin
