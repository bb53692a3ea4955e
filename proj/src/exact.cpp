#include "exact.hpp"

#include <deque>

namespace mvtwin {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::Domain, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::Parse, "empty rational literal");
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class v(mpz_class(text), 1);
      v.canonicalize();
      return Rational(v);
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::Domain, "zero denominator in '" + text + "'");
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "bad rational literal '" + text + "'");
  }
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(ErrorCode::Domain, "division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::Domain, "division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::Domain, "matrix dimensions must be positive");
  data_.resize(static_cast<std::size_t>(rows) * cols);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
  Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
  }
  return m;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c) != Rational(r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::Domain, "dimension mismatch in product");
  Matrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int m = 0; m < a.cols(); ++m) {
      const Rational& x = a.at(r, m);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c) {
        if (b.at(m, c).is_zero()) continue;
        out.at(r, c) += x * b.at(m, c);
      }
    }
  }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::Domain, "dimension mismatch in sum");
  }
  Matrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  }
  return out;
}

Matrix mat_scale(const Rational& c, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int j = 0; j < a.cols(); ++j) out.at(r, j) = c * a.at(r, j);
  }
  return out;
}

bool mat_eq(const Matrix& a, const Matrix& b) { return a == b; }

std::vector<Rational> mat_vec(const Matrix& a, const std::vector<Rational>& v) {
  if (a.cols() != static_cast<int>(v.size())) {
    throw Error(ErrorCode::Domain, "dimension mismatch in matrix-vector product");
  }
  std::vector<Rational> out(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    Rational acc;
    for (int c = 0; c < a.cols(); ++c) acc += a.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Domain, "inverse of a non-square matrix");
  const int n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    Rational scale = a.at(col, col).inv();
    for (int c = 0; c < n; ++c) {
      a.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

Matrix conjugate(const Matrix& m, const Matrix& p) {
  return mat_mul(mat_mul(inverse(p), m), p);
}

namespace {

// Row-reduced basis of flattened matrices for exact rank maintenance.
class SpanBasis {
public:
  // Reduces v against the basis; if a nonzero residue remains it is
  // normalized, inserted, and true is returned.
  bool insert(std::vector<Rational> v) {
    for (const Row& row : rows_) {
      if (row.pivot < v.size() && !v[row.pivot].is_zero()) {
        Rational f = v[row.pivot];
        for (std::size_t c = row.pivot; c < v.size(); ++c) v[c] -= f * row.data[c];
      }
    }
    std::size_t pivot = v.size();
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c].is_zero()) {
        pivot = c;
        break;
      }
    }
    if (pivot == v.size()) return false;
    Rational scale = v[pivot].inv();
    for (std::size_t c = pivot; c < v.size(); ++c) v[c] *= scale;
    rows_.push_back(Row{pivot, std::move(v)});
    return true;
  }

  int dimension() const { return static_cast<int>(rows_.size()); }

private:
  struct Row {
    std::size_t pivot;
    std::vector<Rational> data;
  };
  std::vector<Row> rows_;
};

std::vector<Rational> flatten(const Matrix& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  }
  return v;
}

}  // namespace

int algebra_span_dimension(const std::vector<Matrix>& gens) {
  if (gens.empty()) return 1;
  const int n = gens[0].rows();
  for (const Matrix& g : gens) {
    if (g.rows() != n || g.cols() != n) {
      throw Error(ErrorCode::Domain, "span generators must be square of equal size");
    }
  }
  SpanBasis basis;
  std::vector<Matrix> elems;
  auto try_insert = [&](const Matrix& m) {
    if (basis.insert(flatten(m))) elems.push_back(m);
  };
  try_insert(Matrix::identity(n));
  for (const Matrix& g : gens) try_insert(g);

  const int full = n * n;
  std::size_t next = 0;
  while (next < elems.size() && basis.dimension() < full) {
    Matrix m = elems[next++];
    for (const Matrix& g : gens) {
      try_insert(mat_mul(g, m));
      try_insert(mat_mul(m, g));
      if (basis.dimension() == full) break;
    }
  }
  return basis.dimension();
}

bool is_irreducible(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw Error(ErrorCode::Domain, "no generators given");
  const int n = gens[0].rows();
  return algebra_span_dimension(gens) == n * n;
}

bool verify_invariant_line(const std::vector<Rational>& v, const std::vector<Matrix>& gens) {
  bool nonzero = false;
  for (const Rational& x : v) nonzero = nonzero || !x.is_zero();
  if (!nonzero) throw Error(ErrorCode::Domain, "invariant line candidate must be nonzero");
  std::size_t anchor = 0;
  while (v[anchor].is_zero()) ++anchor;
  for (const Matrix& m : gens) {
    std::vector<Rational> w = mat_vec(m, v);
    Rational scale = w[anchor] / v[anchor];
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (w[x] != scale * v[x]) return false;
    }
  }
  return true;
}

}  // namespace mvtwin
