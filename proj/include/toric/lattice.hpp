#pragma once

// Exact integer and rational linear algebra shared by every module.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// A point of N or M: a fixed-length tuple of arbitrary-precision integers.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector unit(std::size_t n, std::size_t i, long value = 1);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;
  /// Sum of coordinates.
  Integer total() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, const LatticeVector& v);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const LatticeVector& b);
Integer gcd_of(const LatticeVector& v);

/// v divided by the gcd of its entries. Throws on the zero vector.
LatticeVector primitivize(const LatticeVector& v);

RationalVector to_rational(const LatticeVector& v);

/// Narrowing conversion used where coordinates index loops or exponents.
long to_long(const Integer& x);

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Matrix whose j-th column is vs[j].
IntegerMatrix columns_matrix(std::span<const LatticeVector> vs);
/// Matrix whose i-th row is vs[i].
IntegerMatrix rows_matrix(std::span<const LatticeVector> vs);
LatticeVector column(const IntegerMatrix& m, std::size_t j);
LatticeVector apply(const IntegerMatrix& m, const LatticeVector& v);

RationalMatrix to_rational(const IntegerMatrix& m);
/// Throws if some entry is not an integer.
IntegerMatrix to_integer(const RationalMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(IntegerMatrix m);
/// Fraction-free (Bareiss) rank.
std::size_t rank(IntegerMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Solves A x = b exactly. Free variables are set to zero; nullopt if inconsistent.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

/// Exact inverse of a square matrix; throws if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// A basis of the right kernel {x : A x = 0}, scaled to primitive integer vectors.
std::vector<LatticeVector> kernel_basis(const IntegerMatrix& a);

}  // namespace toric
