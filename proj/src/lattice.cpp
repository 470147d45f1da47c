#include "toric/lattice.hpp"

#include <sstream>

namespace toric {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i, long value) {
  LatticeVector v(n);
  v[i] = value;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer LatticeVector::total() const {
  Integer s = 0;
  for (const auto& c : coords_) s += c;
  return s;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw Error("lattice vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw Error("lattice vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticeVector operator*(const Integer& s, const LatticeVector& v) {
  LatticeVector r(v);
  for (auto& c : r.coords_) c *= s;
  return r;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error("pairing: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error("pairing: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

Integer gcd_of(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

LatticeVector primitivize(const LatticeVector& v) {
  Integer g = gcd_of(v);
  if (g == 0) throw Error("zero ray");
  if (g == 1) return v;
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c / g);
  return LatticeVector(std::move(out));
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& c : v) r.emplace_back(c);
  return r;
}

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw Error("integer too large for enumeration: " + x.get_str());
  return x.get_si();
}

IntegerMatrix columns_matrix(std::span<const LatticeVector> vs) {
  const std::size_t n = vs.empty() ? 0 : vs.front().size();
  IntegerMatrix m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != n) throw Error("columns_matrix: ragged input");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  }
  return m;
}

IntegerMatrix rows_matrix(std::span<const LatticeVector> vs) {
  const std::size_t n = vs.empty() ? 0 : vs.front().size();
  IntegerMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != n) throw Error("rows_matrix: ragged input");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  }
  return m;
}

LatticeVector column(const IntegerMatrix& m, std::size_t j) {
  LatticeVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

LatticeVector apply(const IntegerMatrix& m, const LatticeVector& v) {
  if (m.cols() != v.size()) throw Error("apply: dimension mismatch");
  LatticeVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error("matrix entry is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

namespace {

// In-place Bareiss elimination. Returns the rank; `sign` tracks row swaps and
// `last_pivot` ends as the determinant when the matrix is square and full rank.
std::size_t bareiss(IntegerMatrix& m, int& sign, Integer& last_pivot) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  sign = 1;
  last_pivot = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      m.swap_rows(piv, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), last_pivot.get_mpz_t());
      }
      m(i, c) = 0;
    }
    last_pivot = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Integer determinant(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  int sign = 1;
  Integer last;
  // Bareiss with column skipping breaks the determinant identity, so detect singularity first.
  const std::size_t n = m.rows();
  std::size_t r = bareiss(m, sign, last);
  if (r < n || m(n - 1, n - 1) == 0) return 0;
  return sign * m(n - 1, n - 1);
}

std::size_t rank(IntegerMatrix m) {
  int sign = 1;
  Integer last;
  return bareiss(m, sign, last);
}

std::size_t rank(const RationalMatrix& m) {
  // Clear denominators row by row; rank is unchanged.
  IntegerMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m(i, j) * Rational(l);
      z(i, j) = scaled.get_num();
    }
  }
  return rank(std::move(z));
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) throw Error("solve: right-hand side length mismatch");
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, r);
    std::swap(b[piv], b[r]);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("inverse of a non-square matrix");
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw Error("matrix is singular");
    a.swap_rows(piv, c);
    inv.swap_rows(piv, c);
    Rational s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<LatticeVector> kernel_basis(const IntegerMatrix& z) {
  RationalMatrix a = to_rational(z);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, r);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<LatticeVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = -a(i, f);
    Integer l = 1;
    for (const auto& q : x) l = lcm(l, q.get_den());
    LatticeVector v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = x[j] * Rational(l);
      v[j] = s.get_num();
    }
    basis.push_back(primitivize(v));
  }
  return basis;
}

}  // namespace toric
