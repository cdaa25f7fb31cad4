#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "compid/exact.hpp"

namespace compid {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Rank over F_p by Gaussian elimination.
std::size_t rank(Matrix<Fp> m);
/// Exact rank over Q: rows are cleared of denominators, then reduced by
/// fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix<Rational>& m);
/// Exact rank of an integer matrix by Bareiss elimination.
std::size_t rank(IntMatrix m);

/// Determinant of a square integer matrix (Bareiss). Throws NotSquare.
BigInt determinant(IntMatrix m);

/// Exact inverse of a square integer matrix with determinant +-1.
/// Throws NotSquare or NotUnimodular.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Solves M z = u for integer z using the square row block `pivot_rows` of M,
/// which must be unimodular: z = M[pivot_rows]^-1 u[pivot_rows]. The full
/// system is then checked; a mismatch throws InconsistentSystem.
std::vector<BigInt> integer_solve_in_lattice(const IntMatrix& m, std::span<const BigInt> u,
                                             std::span<const std::size_t> pivot_rows);

/// Convenience conversion for small exponent matrices.
IntMatrix to_int_matrix(const std::vector<std::vector<int>>& rows, std::size_t cols);
Matrix<Rational> to_rational(const IntMatrix& m);
Matrix<Fp> to_prime_field(const IntMatrix& m);

/// Converts to int, throwing InconsistentSystem if the value does not fit.
int to_small_int(const BigInt& x);

}  // namespace compid
