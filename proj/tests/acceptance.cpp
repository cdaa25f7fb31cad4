// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: compid_acceptance [criterion...]   (default: all)

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "compid/census.hpp"
#include "compid/charpoly.hpp"
#include "compid/reparam.hpp"

using namespace compid;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

CompartmentGraph exchange_chain() { return CompartmentGraph(4, {{2, 1}, {1, 2}, {3, 2}, {2, 3}, {4, 3}, {2, 4}}); }
CompartmentGraph deficient_graph() { return CompartmentGraph(4, {{2, 1}, {1, 2}, {3, 2}, {4, 3}, {2, 4}, {3, 4}}); }
CompartmentGraph five_compartment() {
  return CompartmentGraph(5, {{3, 1}, {5, 1}, {1, 2}, {1, 3}, {2, 3}, {4, 3}, {3, 4}, {4, 5}});
}

struct TableRow {
  int n, m;
  std::uint64_t a, b, c;
  std::optional<std::uint64_t> d;
  std::uint64_t e;
  std::optional<std::uint64_t> f;
};

const std::vector<TableRow> kTable = {
    {3, 3, 2, 2, 1, {}, 1, {}},
    {3, 4, 9, 7, 5, 4, 4, 4},
    {4, 4, 6, 6, 1, {}, 1, {}},
    {4, 5, 84, 54, 15, {}, 12, {}},
    {4, 6, 316, 166, 55, 34, 30, 26},
    {5, 5, 24, 24, 1, {}, 1, {}},
    {5, 6, 720, 576, 32, {}, 26, {}},
    {5, 7, 6440, 4052, 281, {}, 180, {}},
    {5, 8, 26875, 9565, 1158, 581, 421, 267},
};

std::string opt_str(const std::optional<std::uint64_t>& x) { return x ? std::to_string(*x) : "-"; }

std::string row_str(std::uint64_t a, std::uint64_t b, std::uint64_t c, const std::optional<std::uint64_t>& d,
                    std::uint64_t e, const std::optional<std::uint64_t>& f) {
  return std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c) + "/" + opt_str(d) + "/" +
         std::to_string(e) + "/" + opt_str(f);
}

void fail(Outcome& o, const std::string& why) {
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

// Random strongly connected graph with n vertices.
CompartmentGraph random_sc_graph(int n, std::mt19937_64& rng, int max_edges = -1) {
  const auto cand = candidate_edges(n);
  const int cap = max_edges < 0 ? static_cast<int>(cand.size()) : max_edges;
  while (true) {
    const int m = n + static_cast<int>(rng() % static_cast<std::uint64_t>(cap - n + 1));
    std::vector<std::size_t> idx(cand.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) edges.push_back(cand[idx[static_cast<std::size_t>(i)]]);
    CompartmentGraph g(n, edges);
    if (is_strongly_connected(g)) return g;
  }
}

// 1. Census table.
Outcome table_reproduction() {
  Outcome o;
  std::vector<std::string> rows;
  for (const TableRow& t : kTable) {
    const CensusRow r = census_row(t.n, t.m);
    const std::string got = row_str(r.a, r.b, r.c, r.d, r.e, r.f);
    const std::string want = row_str(t.a, t.b, t.c, t.d, t.e, t.f);
    if (got != want) fail(o, "(" + std::to_string(t.n) + "," + std::to_string(t.m) + ") got " + got + " want " + want);
  }
  if (o.pass) o.detail = "all nine rows exact";
  return o;
}

// 2. Worked examples.
Outcome worked_examples() {
  Outcome o;
  {
    const CompartmentGraph g = exchange_chain();
    const auto r = reparametrize(g);
    if (r.dimension.d != 7) fail(o, "exchange chain d = " + std::to_string(r.dimension.d));
    std::vector<std::string> names;
    for (const Cycle& c : identifiable_cycle_functions(g)) {
      names.push_back(format_monomial(c.monomial_exponents(g), [&](std::size_t p) { return g.parameter_name(static_cast<int>(p)); }));
    }
    std::sort(names.begin(), names.end());
    std::vector<std::string> want{"a11", "a22", "a33", "a44", "a12*a21", "a23*a32", "a23*a34*a42"};
    std::sort(want.begin(), want.end());
    if (names != want) fail(o, "exchange chain identifiable functions differ");
    const std::vector<std::vector<std::string>> matrix{{"a11", "1", "0", "0"},
                                                       {"a12*a21", "a22", "1", "0"},
                                                       {"0", "a23*a32", "a33", "1"},
                                                       {"0", "a23*a34*a42", "0", "a44"}};
    if (!r.reparametrization || reparametrized_matrix(g, *r.reparametrization) != matrix) {
      fail(o, "exchange chain reparametrized matrix differs");
    }
  }
  {
    const auto r = reparametrize(deficient_graph());
    if (r.reparametrization || r.dimension.d != 6) fail(o, "deficient graph should have no reparametrization with d = 6");
  }
  {
    const CompartmentGraph g = five_compartment();
    auto e = [&](Vertex s, Vertex t) { return *g.edge_index(s, t); };
    ReparamOptions options;
    options.tree_edges = std::vector<int>{e(2, 3), e(3, 4), e(4, 5), e(5, 1)};
    const auto r = reparametrize(g, options);
    if (r.dimension.d != 9 || !r.reparametrization) {
      fail(o, "five-compartment graph d = " + std::to_string(r.dimension.d));
    } else {
      // Expected entries as exponent vectors over the edges, after cancelling
      // the quotients of cycle monomials.
      auto mono = [&](std::initializer_list<std::tuple<Vertex, Vertex, int>> fs) {
        std::vector<int> v(static_cast<std::size_t>(g.edge_count()), 0);
        for (auto [s, t, k] : fs) v[static_cast<std::size_t>(e(s, t))] += k;
        return v;
      };
      const std::vector<std::pair<int, std::vector<int>>> entries{
          {e(3, 1), mono({{3, 1, 1}, {1, 3, 1}, {3, 4, -1}, {1, 3, -1}, {5, 1, -1}, {4, 5, -1}})},
          {e(5, 1), mono({})},
          {e(1, 2), mono({{3, 4, 1}, {1, 3, 1}, {5, 1, 1}, {4, 5, 1}, {3, 1, 1}, {2, 3, 1}, {1, 2, 1}, {3, 1, -1}, {1, 3, -1}})},
          {e(1, 3), mono({{3, 4, 1}, {1, 3, 1}, {5, 1, 1}, {4, 5, 1}})},
          {e(2, 3), mono({})},
          {e(4, 3), mono({{4, 3, 1}, {3, 4, 1}})},
          {e(3, 4), mono({})},
          {e(4, 5), mono({})},
      };
      for (const auto& [edge, want] : entries) {
        if (r.reparametrization->rescaled_exponents[static_cast<std::size_t>(edge)] != want) {
          fail(o, "five-compartment graph entry " + g.parameter_name(g.edge_parameter(edge)) + " differs");
        }
      }
    }
  }
  if (o.pass) o.detail = "exchange chain, deficient and five-compartment graphs exact";
  return o;
}

template <typename S>
bool identities_hold(const CompartmentGraph& g, std::mt19937_64& rng, bool exchange_identity) {
  for (int k = 0; k < 100; ++k) {
    const auto p = random_point<S>(static_cast<std::size_t>(g.parameter_count()), rng);
    const auto cf = numeric_coefficients<S>(g, p);
    if (p[0] != -cf.c[0] + cf.d[0]) return false;
    if (exchange_identity) {
      const S a12 = p[static_cast<std::size_t>(g.edge_parameter(*g.edge_index(2, 1)))];
      const S a21 = p[static_cast<std::size_t>(g.edge_parameter(*g.edge_index(1, 2)))];
      const S rhs = cf.d[1] - cf.c[1] + cf.c[0] * cf.d[0] - cf.d[0] * cf.d[0];
      if (a12 * a21 != rhs) return false;
    }
  }
  return true;
}

// 3. Identities.
Outcome identities() {
  Outcome o;
  std::vector<CompartmentGraph> fixtures{exchange_chain(), deficient_graph(), five_compartment(), directed_cycle(3),
                                         directed_cycle(6), CompartmentGraph(2, {{1, 2}, {2, 1}})};
  std::mt19937_64 rng(2024);
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const bool fig1a = i == 0;
    if (!identities_hold<Fp>(fixtures[i], rng, fig1a)) fail(o, "prime-field identity fails on fixture " + std::to_string(i));
    if (!identities_hold<Rational>(fixtures[i], rng, fig1a)) fail(o, "rational identity fails on fixture " + std::to_string(i));
  }
  if (o.pass) o.detail = "100 points per fixture, both modes";
  return o;
}

bool symbolic_matches(const CompartmentGraph& g, std::mt19937_64& rng) {
  const SymbolicCoefficients sym = symbolic_coefficients(g);
  for (int k = 0; k < 5; ++k) {
    const auto p = random_point<Rational>(static_cast<std::size_t>(g.parameter_count()), rng);
    const auto num = numeric_coefficients<Rational>(g, p);
    for (std::size_t i = 0; i < sym.c.size(); ++i)
      if (sym.c[i].evaluate<Rational>(p) != num.c[i]) return false;
    for (std::size_t i = 0; i < sym.d.size(); ++i)
      if (sym.d[i].evaluate<Rational>(p) != num.d[i]) return false;
  }
  return true;
}

// 4. Symbolic versus numeric coefficients.
Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::uint64_t graphs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int m = n == 1 ? 0 : n; m <= n * (n - 1); ++m) {
      for (const CompartmentGraph& g : enumerate_sc_graphs(n, m)) {
        ++graphs;
        if (!symbolic_matches(g, rng)) fail(o, "mismatch at n = " + std::to_string(n) + ", m = " + std::to_string(m));
      }
    }
  }
  for (int k = 0; k < 500; ++k) {
    ++graphs;
    if (!symbolic_matches(random_sc_graph(5, rng), rng)) fail(o, "mismatch on a random n = 5 graph");
  }
  if (o.pass) o.detail = std::to_string(graphs) + " graphs, 5 points each";
  return o;
}

// 5. Invariance of the coefficient map under A -> D A D^-1.
Outcome similarity_invariance() {
  Outcome o;
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const CompartmentGraph g = random_sc_graph(n, rng);
    const auto p = random_point<Rational>(static_cast<std::size_t>(g.parameter_count()), rng);
    auto scale = random_point<Rational>(static_cast<std::size_t>(n), rng);
    scale[0] = 1;
    auto q = p;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [s, t] = g.edge(e);
      auto& x = q[static_cast<std::size_t>(g.edge_parameter(e))];
      x = x * scale[static_cast<std::size_t>(t - 1)] / scale[static_cast<std::size_t>(s - 1)];
    }
    if (numeric_coefficients<Rational>(g, p) != numeric_coefficients<Rational>(g, q)) {
      fail(o, "coefficients changed under a diagonal similarity");
      break;
    }
  }
  if (o.pass) o.detail = "1000 random (graph, D) pairs";
  return o;
}

// 6. Proven statements.
Outcome proven_theorems() {
  Outcome o;
  std::ostringstream summary;
  for (const PropertyResult& p : property_suite(5)) {
    summary << p.name << " " << p.checked << (p.passed ? "" : " FAILED") << ", ";
    if (!p.passed) fail(o, p.name + ": " + p.detail);
  }
  if (o.pass) {
    o.detail = summary.str();
    o.detail.resize(o.detail.size() - 2);
  }
  return o;
}

// 7. Reparametrizations over every graph counted in B.
Outcome reparam_soundness() {
  Outcome o;
  std::uint64_t graphs = 0, verified = 0, single = 0;
  for (const TableRow& t : kTable) {
    const CensusRow row = census_row(t.n, t.m);
    const ReparamSweep sweep = sweep_reparametrizations(row, 2);
    graphs += sweep.graphs;
    verified += sweep.verified;
    single += sweep.single_tree;
    if (!sweep.failures.empty()) {
      fail(o, "(" + std::to_string(t.n) + "," + std::to_string(t.m) + ") " + std::to_string(sweep.failures.size()) +
                  " failures, first: " + sweep.failures.front());
    }
  }
  if (o.pass) o.detail = std::to_string(graphs) + " graphs, " + std::to_string(verified) + " (graph, tree) pairs verified, " +
                          std::to_string(single) + " with a single tree";
  return o;
}

// 8. Randomization stability.
Outcome randomization_stability() {
  Outcome o;
  std::mt19937_64 rng(8);
  int upward = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const CompartmentGraph g = random_sc_graph(n, rng, std::min(2 * n - 1, n * (n - 1)));
    const int short_run = image_dimension(g, {2, 11, ArithmeticMode::PrimeField}).d;
    const int long_run = image_dimension(g, {4, 29, ArithmeticMode::PrimeField}).d;
    if (short_run == long_run) continue;
    if (long_run > short_run) {
      ++upward;
      std::cerr << "stability: rank rose from " << short_run << " to " << long_run << "\n";
    } else {
      fail(o, "trials=4 rank below trials=2 rank");
    }
  }
  // The (5,8) row again with four trials at a second seed.
  CensusOptions strict;
  strict.trials = 4;
  strict.seed = 1;
  const CensusRow base = census_row(5, 8);
  const CensusRow again = census_row(5, 8, strict);
  if (base.b != again.b || base.e != again.e) fail(o, "(5,8) row changed with trials=4 at seed 1");
  if (o.pass) o.detail = "200 graphs, " + std::to_string(upward) + " upward resolutions; (5,8) stable at 4 trials";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", table_reproduction},
      {"worked examples", worked_examples},
      {"identity checks", identities},
      {"oracle equivalence", oracle_equivalence},
      {"similarity invariance", similarity_invariance},
      {"proven-theorem suite", proven_theorems},
      {"reparametrization soundness", reparam_soundness},
      {"randomization stability", randomization_stability},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    const auto& [name, run] = criteria[static_cast<std::size_t>(id - 1)];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << id << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " [" << secs << " s] "
              << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
