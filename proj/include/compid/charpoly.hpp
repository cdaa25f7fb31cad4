#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "compid/cycles.hpp"
#include "compid/graph.hpp"
#include "compid/jet.hpp"
#include "compid/matrix.hpp"
#include "compid/polynomial.hpp"

namespace compid {

enum class ArithmeticMode { PrimeField, Rational };

std::string to_string(ArithmeticMode mode);

/// Coefficients of det(lambda I - A) = lambda^n + sum c_i lambda^(n-i) and of
/// the same polynomial for A with row/column 1 deleted (d_1..d_{n-1}).
struct SymbolicCoefficients {
  std::vector<MonomialPolynomial> c;
  std::vector<MonomialPolynomial> d;
};

/// Expansion over vertex-disjoint cycle collections: c_i collects every
/// collection covering i vertices with sign (-1)^i times (-1) per even cycle;
/// d_i does the same with cycles avoiding vertex 1.
SymbolicCoefficients symbolic_coefficients(const CompartmentGraph& g);

template <typename R>
struct CoefficientVector {
  std::vector<R> c;
  std::vector<R> d;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// The matrix A(G) at an assignment indexed like the graph parameters.
template <typename R>
Matrix<R> model_matrix(const CompartmentGraph& g, std::span<const R> assignment);

/// Faddeev-LeVerrier: c_1..c_n of det(lambda I - a). Divides by 1..n.
template <typename R>
std::vector<R> faddeev_leverrier(const Matrix<R>& a);

template <typename R>
CoefficientVector<R> numeric_coefficients(const CompartmentGraph& g, std::span<const R> assignment);

/// (2n-1) x (n+m) Jacobian of (c_1..c_n, d_1..d_{n-1}) at `point`, from one
/// jet-valued evaluation.
template <typename S>
Matrix<S> jacobian(const CompartmentGraph& g, std::span<const S> point);

/// Same, but differentiating only with respect to the parameters flagged in
/// `free`; the others are held constant at their values in `point`.
template <typename S>
Matrix<S> jacobian(const CompartmentGraph& g, std::span<const S> point, const std::vector<bool>& free);

template <typename S>
std::vector<S> random_point(std::size_t count, std::mt19937_64& rng) {
  std::vector<S> p;
  p.reserve(count);
  for (std::size_t i = 0; i < count; ++i) p.push_back(sample_nonzero<S>(rng));
  return p;
}

struct DimensionOptions {
  int trials = 2;
  std::uint64_t seed = 0;
  ArithmeticMode mode = ArithmeticMode::PrimeField;
};

struct DimensionReport {
  int n = 0;
  int m = 0;
  int d = 0;            // max Jacobian rank over the trials
  int expected = 0;     // m + 1
  bool verdict = false; // d == expected
  int trials = 0;
  std::uint64_t seed = 0;
  ArithmeticMode mode = ArithmeticMode::PrimeField;
  std::vector<int> trial_ranks;
};

/// Generic dimension of the image of the double characteristic polynomial map,
/// as the largest Jacobian rank over `trials` random points drawn from one
/// generator seeded with `seed` (so a longer run extends a shorter one).
/// Throws NotStronglyConnected.
DimensionReport image_dimension(const CompartmentGraph& g, const DimensionOptions& options = {});

/// m <= 2n-2 and image dimension m+1. Throws NotStronglyConnected.
bool has_expected_dimension(const CompartmentGraph& g, const DimensionOptions& options = {});

/// "y'' - (a11 + a22)*y' + (a11*a22 - a12*a21)*y = u1' - a22*u1".
/// Throws NotStronglyConnected.
std::string io_equation_text(const CompartmentGraph& g);

/// The n diagonal one-cycles followed by m-n+1 independent cycles.
/// Throws NotExpectedDimension.
CycleSet identifiable_cycle_functions(const CompartmentGraph& g, const DimensionOptions& options = {});

}  // namespace compid
