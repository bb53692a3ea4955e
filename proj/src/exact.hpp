#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "words.hpp"

namespace mvtwin {

// Arbitrary-precision rational, always reduced with positive denominator.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "[-]num" or "[-]num/den".
  static Rational parse(const std::string& text);

  bool is_zero() const { return v_ == 0; }
  Rational inv() const;

  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
  mpq_class v_;
};

// Dense matrix over Rational with exact arithmetic throughout.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<Rational>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_identity() const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Rational& c, const Matrix& a);
bool mat_eq(const Matrix& a, const Matrix& b);

std::vector<Rational> mat_vec(const Matrix& a, const std::vector<Rational>& v);

// Exact inverse by Gauss-Jordan elimination; singular input raises
// ErrorCode::Singular.
Matrix inverse(const Matrix& m);

// conjugate(m, p) = p^{-1} m p.
Matrix conjugate(const Matrix& m, const Matrix& p);

// Dimension of the unital matrix algebra generated by gens: the span of
// {identity, gens} is closed under left and right multiplication by the
// generators, inserting products in order (basis index, generator index,
// left before right) until a fixed point.  Result is between 1 and n^2.
int algebra_span_dimension(const std::vector<Matrix>& gens);

// Burnside criterion: the generators act irreducibly iff the unital algebra
// they generate is all of the n x n matrices.  Span dimension of rational
// matrices does not change under extension of scalars, so the exact rational
// computation decides complex irreducibility.
bool is_irreducible(const std::vector<Matrix>& gens);

// True iff m * v is an exact scalar multiple of v for every generator m.
bool verify_invariant_line(const std::vector<Rational>& v, const std::vector<Matrix>& gens);

}  // namespace mvtwin
