#include "compid/charpoly.hpp"

#include <algorithm>

#include "compid/errors.hpp"
#include "compid/reparam.hpp"

namespace compid {

std::string to_string(ArithmeticMode mode) {
  return mode == ArithmeticMode::PrimeField ? "prime-field" : "rational";
}

SymbolicCoefficients symbolic_coefficients(const CompartmentGraph& g) {
  const int n = g.vertex_count();
  const auto vars = static_cast<std::size_t>(g.parameter_count());
  const CycleSet cycles = elementary_cycles(g);

  struct Prepared {
    std::uint32_t mask;
    int length;
    Exponents exps;
  };
  std::vector<Prepared> prepared;
  for (const Cycle& c : cycles) {
    std::uint32_t mask = 0;
    for (Vertex v : c.vertices) mask |= std::uint32_t{1} << (v - 1);
    prepared.push_back({mask, c.length(), c.monomial_exponents(g)});
  }

  // Every collection of pairwise disjoint cycles avoiding `forbidden`,
  // accumulated into out[covered - 1].
  auto expand = [&](std::uint32_t forbidden, std::vector<MonomialPolynomial>& out) {
    Exponents exps(vars, 0);
    auto rec = [&](auto&& self, std::size_t from, std::uint32_t used, int covered, int even_cycles) -> void {
      if (covered > 0) {
        const int sign = ((covered + even_cycles) % 2 == 0) ? 1 : -1;
        out[static_cast<std::size_t>(covered - 1)].add_term(exps, sign);
      }
      for (std::size_t k = from; k < prepared.size(); ++k) {
        const Prepared& c = prepared[k];
        if (c.mask & (used | forbidden)) continue;
        for (std::size_t v = 0; v < vars; ++v) exps[v] += c.exps[v];
        self(self, k + 1, used | c.mask, covered + c.length, even_cycles + (c.length % 2 == 0 ? 1 : 0));
        for (std::size_t v = 0; v < vars; ++v) exps[v] -= c.exps[v];
      }
    };
    rec(rec, 0, 0, 0, 0);
  };

  SymbolicCoefficients out;
  out.c.assign(static_cast<std::size_t>(n), MonomialPolynomial(vars));
  out.d.assign(static_cast<std::size_t>(n - 1), MonomialPolynomial(vars));
  expand(0, out.c);
  if (n > 1) expand(1, out.d);
  return out;
}

template <typename R>
Matrix<R> model_matrix(const CompartmentGraph& g, std::span<const R> assignment) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix<R> a(n, n);
  for (std::size_t v = 0; v < n; ++v) a(v, v) = assignment[v];
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    a(static_cast<std::size_t>(edge.target - 1), static_cast<std::size_t>(edge.source - 1)) =
        assignment[static_cast<std::size_t>(g.edge_parameter(e))];
  }
  return a;
}

namespace {

template <typename S>
S divide_by(const S& x, int k) {
  return x / scalar_from_int<S>(k);
}
template <typename S>
Jet<S> divide_by(const Jet<S>& x, int k) {
  return x / scalar_from_int<S>(k);
}

template <typename R>
void check_characteristic(std::size_t n) {
  if constexpr (std::is_same_v<R, Fp> || std::is_same_v<R, Jet<Fp>>) {
    if (n >= Fp::kModulus) throw FieldCharacteristicTooSmall("matrix order reaches the field characteristic");
  }
}

}  // namespace

template <typename R>
std::vector<R> faddeev_leverrier(const Matrix<R>& a) {
  const std::size_t n = a.rows();
  check_characteristic<R>(n);
  std::vector<R> c;
  c.reserve(n);
  // M_1 = I, c_k = -tr(A M_k) / k, M_{k+1} = A M_k + c_k I.
  Matrix<R> m = Matrix<R>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix<R> am = a * m;
    R trace = RingTraits<R>::from_int(0);
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    const R negated = -trace;
    R ck = divide_by(negated, static_cast<int>(k));
    if (k < n) {
      m = am;
      for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    c.push_back(std::move(ck));
  }
  return c;
}

template <typename R>
CoefficientVector<R> numeric_coefficients(const CompartmentGraph& g, std::span<const R> assignment) {
  const Matrix<R> a = model_matrix(g, assignment);
  const std::size_t n = a.rows();
  Matrix<R> a1(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) a1(i - 1, j - 1) = a(i, j);
  return {faddeev_leverrier(a), faddeev_leverrier(a1)};
}

template <typename S>
Matrix<S> jacobian(const CompartmentGraph& g, std::span<const S> point, const std::vector<bool>& free) {
  const auto width = static_cast<std::size_t>(g.parameter_count());
  std::vector<Jet<S>> jets;
  jets.reserve(width);
  for (std::size_t p = 0; p < width; ++p) {
    jets.push_back(free[p] ? Jet<S>::variable(point[p], p, width) : Jet<S>::constant(point[p], width));
  }
  const CoefficientVector<Jet<S>> coeffs = numeric_coefficients<Jet<S>>(g, jets);
  const std::size_t rows = coeffs.c.size() + coeffs.d.size();
  Matrix<S> out(rows, width);
  std::size_t r = 0;
  for (const auto* part : {&coeffs.c, &coeffs.d}) {
    for (const Jet<S>& j : *part) {
      for (std::size_t p = 0; p < j.width(); ++p) out(r, p) = j.partial(p);
      ++r;
    }
  }
  return out;
}

template <typename S>
Matrix<S> jacobian(const CompartmentGraph& g, std::span<const S> point) {
  return jacobian(g, point, std::vector<bool>(static_cast<std::size_t>(g.parameter_count()), true));
}

#define COMPID_INSTANTIATE_RING(R)                                                        \
  template Matrix<R> model_matrix<R>(const CompartmentGraph&, std::span<const R>);        \
  template std::vector<R> faddeev_leverrier<R>(const Matrix<R>&);                          \
  template CoefficientVector<R> numeric_coefficients<R>(const CompartmentGraph&, std::span<const R>);

COMPID_INSTANTIATE_RING(Fp)
COMPID_INSTANTIATE_RING(Rational)
COMPID_INSTANTIATE_RING(Jet<Fp>)
COMPID_INSTANTIATE_RING(Jet<Rational>)
#undef COMPID_INSTANTIATE_RING

template Matrix<Fp> jacobian<Fp>(const CompartmentGraph&, std::span<const Fp>);
template Matrix<Rational> jacobian<Rational>(const CompartmentGraph&, std::span<const Rational>);
template Matrix<Fp> jacobian<Fp>(const CompartmentGraph&, std::span<const Fp>, const std::vector<bool>&);
template Matrix<Rational> jacobian<Rational>(const CompartmentGraph&, std::span<const Rational>,
                                             const std::vector<bool>&);

namespace {

template <typename S>
void run_trials(const CompartmentGraph& g, DimensionReport& report) {
  std::mt19937_64 rng(report.seed);
  for (int t = 0; t < report.trials; ++t) {
    const auto point = random_point<S>(static_cast<std::size_t>(g.parameter_count()), rng);
    const int r = static_cast<int>(rank(jacobian<S>(g, point)));
    report.trial_ranks.push_back(r);
    report.d = std::max(report.d, r);
  }
}

}  // namespace

DimensionReport image_dimension(const CompartmentGraph& g, const DimensionOptions& options) {
  if (!is_strongly_connected(g)) throw NotStronglyConnected("image dimension requires a strongly connected graph");
  DimensionReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.expected = report.m + 1;
  report.trials = std::max(1, options.trials);
  report.seed = options.seed;
  report.mode = options.mode;
  if (options.mode == ArithmeticMode::PrimeField) {
    run_trials<Fp>(g, report);
  } else {
    run_trials<Rational>(g, report);
  }
  report.verdict = report.d == report.expected;
  return report;
}

bool has_expected_dimension(const CompartmentGraph& g, const DimensionOptions& options) {
  if (!is_strongly_connected(g)) throw NotStronglyConnected("expected dimension requires a strongly connected graph");
  if (g.edge_count() > 2 * g.vertex_count() - 2) return false;
  return image_dimension(g, options).verdict;
}

namespace {

std::string derivative(const std::string& symbol, int order) {
  if (order == 0) return symbol;
  if (order <= 3) return symbol + std::string(static_cast<std::size_t>(order), '\'');
  return symbol + "^(" + std::to_string(order) + ")";
}

// Appends " + coeff*symbol" with the sign pulled out front.
void append_term(std::string& out, const MonomialPolynomial& coeff, const std::string& symbol,
                 const std::function<std::string(std::size_t)>& name) {
  if (coeff.is_zero()) return;
  // Descending order puts the leading term first; factor out its sign.
  const std::string rendered = coeff.to_string(name);
  const bool negative = rendered.front() == '-';
  const std::string body = negative ? (-coeff).to_string(name) : rendered;
  const bool single = coeff.terms().size() == 1;
  out += negative ? " - " : " + ";
  if (single && body == "1") {
    out += symbol;
    return;
  }
  out += single ? body : "(" + body + ")";
  out += "*" + symbol;
}

}  // namespace

std::string io_equation_text(const CompartmentGraph& g) {
  if (!is_strongly_connected(g)) throw NotStronglyConnected("input-output equation requires a strongly connected graph");
  const int n = g.vertex_count();
  const SymbolicCoefficients coeffs = symbolic_coefficients(g);
  auto name = [&](std::size_t p) { return g.parameter_name(static_cast<int>(p)); };

  std::string lhs = derivative("y", n);
  for (int i = 1; i <= n; ++i) append_term(lhs, coeffs.c[static_cast<std::size_t>(i - 1)], derivative("y", n - i), name);
  std::string rhs = derivative("u1", n - 1);
  for (int i = 1; i < n; ++i) append_term(rhs, coeffs.d[static_cast<std::size_t>(i - 1)], derivative("u1", n - 1 - i), name);
  return lhs + " = " + rhs;
}

CycleSet identifiable_cycle_functions(const CompartmentGraph& g, const DimensionOptions& options) {
  if (!has_expected_dimension(g, options)) {
    throw NotExpectedDimension("graph does not have the expected dimension");
  }
  CycleSet out;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) out.push_back({{v}, {}});
  const CycleBasis basis = cycle_basis(g, spanning_tree(g));
  out.insert(out.end(), basis.cycles.begin(), basis.cycles.end());
  return out;
}

}  // namespace compid
