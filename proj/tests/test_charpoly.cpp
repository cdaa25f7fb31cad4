#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "compid/census.hpp"
#include "compid/charpoly.hpp"
#include "compid/errors.hpp"

using namespace compid;

namespace {

CompartmentGraph exchange_chain() { return CompartmentGraph(4, {{2, 1}, {1, 2}, {3, 2}, {2, 3}, {4, 3}, {2, 4}}); }
CompartmentGraph deficient_graph() { return CompartmentGraph(4, {{2, 1}, {1, 2}, {3, 2}, {4, 3}, {2, 4}, {3, 4}}); }
CompartmentGraph five_compartment() {
  return CompartmentGraph(5, {{3, 1}, {5, 1}, {1, 2}, {1, 3}, {2, 3}, {4, 3}, {3, 4}, {4, 5}});
}

Rational det_oracle(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<Rational> random_rationals(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 7);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

// E_k of the values.
Rational elementary_symmetric(const std::vector<Rational>& xs, int k) {
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
  e[0] = 1;
  for (const Rational& x : xs)
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * x;
  return e[static_cast<std::size_t>(k)];
}

}  // namespace

TEST(FaddeevLeVerrier, MatchesDeterminantOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix<Rational> a(n, n);
    const auto vals = random_rationals(n * n, rng);
    for (std::size_t i = 0; i < n * n; ++i) a(i / n, i % n) = vals[i];
    const auto c = faddeev_leverrier(a);
    for (int lambda = -2; lambda <= 2; ++lambda) {
      Matrix<Rational> shifted(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? Rational(lambda) : Rational(0)) - a(i, j);
      Rational poly = 1;
      for (std::size_t k = 0; k < n; ++k) poly = poly * lambda + c[k];
      ASSERT_EQ(poly, det_oracle(shifted));
    }
  }
}

TEST(Coefficients, SymbolicEqualsNumericForSmallGraphs) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    for (int m = n == 1 ? 0 : n; m <= n * (n - 1); ++m) {
      for (const CompartmentGraph& g : enumerate_sc_graphs(n, m)) {
        const SymbolicCoefficients sym = symbolic_coefficients(g);
        const auto point = random_rationals(static_cast<std::size_t>(g.parameter_count()), rng);
        const CoefficientVector<Rational> num = numeric_coefficients<Rational>(g, point);
        for (std::size_t i = 0; i < sym.c.size(); ++i) ASSERT_EQ(sym.c[i].evaluate<Rational>(point), num.c[i]);
        for (std::size_t i = 0; i < sym.d.size(); ++i) ASSERT_EQ(sym.d[i].evaluate<Rational>(point), num.d[i]);
      }
    }
  }
}

TEST(Coefficients, HomogeneousOfDegreeI) {
  const SymbolicCoefficients sym = symbolic_coefficients(five_compartment());
  for (std::size_t i = 0; i < sym.c.size(); ++i) EXPECT_EQ(sym.c[i].homogeneous_degree(), static_cast<int>(i + 1));
  for (std::size_t i = 0; i < sym.d.size(); ++i) {
    EXPECT_EQ(sym.d[i].homogeneous_degree(), static_cast<int>(i + 1));
    EXPECT_FALSE(sym.d[i].involves(0));  // a11 never enters A_1
  }
}

TEST(Coefficients, ExchangeChainClosedForms) {
  const CompartmentGraph g = exchange_chain();
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_rationals(10, rng);
    const Rational &a11 = p[0], &a22 = p[1], &a33 = p[2], &a44 = p[3];
    const Rational &a12 = p[4], &a21 = p[5], &a23 = p[6], &a32 = p[7], &a34 = p[8], &a42 = p[9];
    const auto num = numeric_coefficients<Rational>(g, p);
    const std::vector<Rational> diag{a11, a22, a33, a44};
    const Rational c3 = -(elementary_symmetric(diag, 3) - a11 * a23 * a32 - a12 * a21 * a33 - a12 * a21 * a44 -
                          a23 * a32 * a44 + a23 * a34 * a42);
    const Rational c4 = elementary_symmetric(diag, 4) + a11 * a23 * a34 * a42 - a11 * a23 * a32 * a44 -
                        a12 * a21 * a33 * a44;
    ASSERT_EQ(num.c[2], c3);
    ASSERT_EQ(num.c[3], c4);
    ASSERT_EQ(a11, -num.c[0] + num.d[0]);
    ASSERT_EQ(a12 * a21, num.d[1] - num.c[1] + num.c[0] * num.d[0] - num.d[0] * num.d[0]);
  }
}

TEST(Dimension, Fixtures) {
  EXPECT_EQ(image_dimension(exchange_chain()).d, 7);
  EXPECT_TRUE(has_expected_dimension(exchange_chain()));
  EXPECT_EQ(image_dimension(deficient_graph()).d, 6);
  EXPECT_FALSE(has_expected_dimension(deficient_graph()));
  EXPECT_EQ(image_dimension(five_compartment()).d, 9);
  DimensionOptions exact;
  exact.mode = ArithmeticMode::Rational;
  EXPECT_EQ(image_dimension(exchange_chain(), exact).d, 7);
  EXPECT_EQ(image_dimension(deficient_graph(), exact).d, 6);
  EXPECT_EQ(image_dimension(five_compartment(), exact).d, 9);
}

TEST(Dimension, ReportFieldsAndTrialPrefix) {
  DimensionOptions two{2, 17, ArithmeticMode::PrimeField};
  DimensionOptions four{4, 17, ArithmeticMode::PrimeField};
  const auto a = image_dimension(deficient_graph(), two);
  const auto b = image_dimension(deficient_graph(), four);
  EXPECT_EQ(a.n, 4);
  EXPECT_EQ(a.m, 6);
  EXPECT_EQ(a.expected, 7);
  EXPECT_FALSE(a.verdict);
  ASSERT_EQ(b.trial_ranks.size(), 4u);
  EXPECT_TRUE(std::equal(a.trial_ranks.begin(), a.trial_ranks.end(), b.trial_ranks.begin()));
  EXPECT_EQ(image_dimension(deficient_graph(), two).trial_ranks, a.trial_ranks);
}

TEST(Dimension, RequiresStrongConnectivity) {
  const CompartmentGraph g(3, {{1, 2}, {2, 1}, {2, 3}});
  EXPECT_THROW(image_dimension(g), NotStronglyConnected);
  EXPECT_THROW(has_expected_dimension(g), NotStronglyConnected);
}

TEST(Dimension, EdgeBoundShortCircuit) {
  // Complete graph on 3 vertices: m = 6 > 2n-2 = 4, rank capped at 2n-1 = 5.
  const CompartmentGraph g(3, candidate_edges(3));
  EXPECT_FALSE(has_expected_dimension(g));
  EXPECT_LE(image_dimension(g).d, 5);
}

TEST(Dimension, DirectedCycles) {
  for (int n = 3; n <= 6; ++n) EXPECT_TRUE(has_expected_dimension(directed_cycle(n))) << n;
}

TEST(Dimension, SingleCompartment) {
  const auto r = image_dimension(CompartmentGraph());
  EXPECT_EQ(r.d, 1);
  EXPECT_TRUE(r.verdict);
}

TEST(IoEquation, Rendering) {
  EXPECT_EQ(io_equation_text(CompartmentGraph()), "y' - a11*y = u1");
  EXPECT_EQ(io_equation_text(CompartmentGraph(2, {{2, 1}, {1, 2}})),
            "y'' - (a11 + a22)*y' + (a11*a22 - a12*a21)*y = u1' - a22*u1");
  const std::string big = io_equation_text(exchange_chain());
  EXPECT_EQ(big.rfind("y^(4) - (a11 + a22 + a33 + a44)*y'''", 0), 0u);
  EXPECT_NE(big.find("= u1''' - (a22 + a33 + a44)*u1''"), std::string::npos);
  EXPECT_THROW(io_equation_text(CompartmentGraph(2, {{1, 2}})), NotStronglyConnected);
}

TEST(IdentifiableFunctions, ExchangeChain) {
  const CompartmentGraph g = exchange_chain();
  std::vector<std::string> names;
  for (const Cycle& c : identifiable_cycle_functions(g)) {
    const auto e = c.monomial_exponents(g);
    names.push_back(format_monomial(e, [&](std::size_t p) { return g.parameter_name(static_cast<int>(p)); }));
  }
  std::sort(names.begin(), names.end());
  std::vector<std::string> expected{"a11", "a22", "a33", "a44", "a12*a21", "a23*a32", "a23*a34*a42"};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(names, expected);
  EXPECT_THROW(identifiable_cycle_functions(deficient_graph()), NotExpectedDimension);
}
