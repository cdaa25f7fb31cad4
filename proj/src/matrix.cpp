#include "compid/matrix.hpp"

#include <climits>
#include <string>

#include "compid/errors.hpp"

namespace compid {

std::string to_string(Fp x) { return std::to_string(x.value()); }
std::string to_string(const Rational& x) { return x.get_str(); }

std::size_t rank(Matrix<Fp> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Fp inv = m(r, c).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Fp factor = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

// Fraction-free forward elimination. Returns the number of pivots and leaves
// the last pivot (for square full-rank input, the determinant up to sign) in
// `last_pivot`; `swaps` counts row exchanges.
std::size_t bareiss(IntMatrix& m, BigInt& last_pivot, std::size_t& swaps) {
  std::size_t r = 0;
  BigInt prev = 1;
  swaps = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        BigInt v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace

std::size_t rank(IntMatrix m) {
  BigInt pivot;
  std::size_t swaps = 0;
  return bareiss(m, pivot, swaps);
}

std::size_t rank(const Matrix<Rational>& m) {
  IntMatrix cleared(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, BigInt(m(i, j).get_den()));
    for (std::size_t j = 0; j < m.cols(); ++j) cleared(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rank(std::move(cleared));
}

BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  BigInt pivot;
  std::size_t swaps = 0;
  if (bareiss(m, pivot, swaps) < m.rows()) return 0;
  return swaps % 2 == 0 ? pivot : BigInt(-pivot);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("cannot invert a non-square matrix");
  const BigInt det = determinant(m);
  if (abs(det) != 1) throw NotUnimodular("determinant is " + det.get_str() + ", not +-1");

  const std::size_t n = m.rows();
  Matrix<Rational> work(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = Rational(m(i, j));
    work(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(work(p, c)) == 0) ++p;  // nonsingular, so a pivot exists
    work.swap_rows(p, c);
    const Rational inv = 1 / work(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) work(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(work(i, c)) == 0) continue;
      const Rational f = work(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) work(i, j) -= f * work(c, j);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = work(i, n + j).get_num();  // denominators are 1
  return out;
}

std::vector<BigInt> integer_solve_in_lattice(const IntMatrix& m, std::span<const BigInt> u,
                                             std::span<const std::size_t> pivot_rows) {
  const std::size_t k = pivot_rows.size();
  if (k != m.cols()) throw NotSquare("pivot row block is not square");
  IntMatrix block(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) block(i, j) = m(pivot_rows[i], j);
  const IntMatrix inv = inverse_unimodular(block);

  std::vector<BigInt> z(k, BigInt(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) z[i] += inv(i, j) * u[pivot_rows[j]];

  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc += m(r, j) * z[j];
    if (acc != u[r]) {
      throw InconsistentSystem("lattice solution does not reproduce row " + std::to_string(r));
    }
  }
  return z;
}

IntMatrix to_int_matrix(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  return out;
}

Matrix<Rational> to_rational(const IntMatrix& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

Matrix<Fp> to_prime_field(const IntMatrix& m) {
  Matrix<Fp> out(m.rows(), m.cols());
  const BigInt p = BigInt(std::to_string(Fp::kModulus));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt r = m(i, j) % p;
      if (sgn(r) < 0) r += p;
      out(i, j) = Fp::from_residue(std::stoull(r.get_str()));
    }
  return out;
}

int to_small_int(const BigInt& x) {
  if (!x.fits_sint_p()) throw InconsistentSystem("exponent " + x.get_str() + " does not fit in int");
  return static_cast<int>(x.get_si());
}

}  // namespace compid
