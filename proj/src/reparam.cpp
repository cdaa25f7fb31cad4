#include "compid/reparam.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "compid/errors.hpp"

namespace compid {

bool SpanningTree::contains(int edge) const { return std::find(edges.begin(), edges.end(), edge) != edges.end(); }

namespace {

constexpr std::uint32_t bit(Vertex v) { return std::uint32_t{1} << (v - 1); }

std::vector<int> unit(int m, int index) {
  std::vector<int> v(static_cast<std::size_t>(m), 0);
  v[static_cast<std::size_t>(index)] = 1;
  return v;
}

}  // namespace

SpanningTree spanning_tree(const CompartmentGraph& g) {
  const int n = g.vertex_count();
  SpanningTree t;
  t.parent_edge.assign(static_cast<std::size_t>(n), -1);
  t.bfs_order = {1};
  std::uint32_t covered = bit(1);
  while (static_cast<int>(t.bfs_order.size()) < n) {
    bool grew = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [s, d] = g.edge(e);
      const bool in_s = covered & bit(s);
      const bool in_d = covered & bit(d);
      if (in_s == in_d) continue;
      const Vertex fresh = in_s ? d : s;
      covered |= bit(fresh);
      t.parent_edge[static_cast<std::size_t>(fresh - 1)] = e;
      t.bfs_order.push_back(fresh);
      t.edges.push_back(e);
      grew = true;
    }
    if (!grew) throw Disconnected("graph is not connected; no spanning tree");
  }
  return t;
}

SpanningTree spanning_tree_from_edges(const CompartmentGraph& g, const std::vector<int>& edges) {
  const int n = g.vertex_count();
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) throw InvalidEdge("tree edge index " + std::to_string(e) + " out of range");
  }
  if (static_cast<int>(edges.size()) != n - 1) {
    throw Disconnected("a spanning tree needs exactly " + std::to_string(n - 1) + " edges");
  }
  SpanningTree t;
  t.edges = edges;
  t.parent_edge.assign(static_cast<std::size_t>(n), -1);
  t.bfs_order = {1};
  std::uint32_t covered = bit(1);
  for (std::size_t head = 0; head < t.bfs_order.size(); ++head) {
    const Vertex v = t.bfs_order[head];
    for (int e : edges) {
      const auto [s, d] = g.edge(e);
      if (s != v && d != v) continue;
      const Vertex other = s == v ? d : s;
      if (covered & bit(other)) continue;
      covered |= bit(other);
      t.parent_edge[static_cast<std::size_t>(other - 1)] = e;
      t.bfs_order.push_back(other);
    }
  }
  if (static_cast<int>(t.bfs_order.size()) != n) throw Disconnected("edges do not span the graph");
  return t;
}

std::vector<SpanningTree> enumerate_spanning_trees(const CompartmentGraph& g, std::size_t limit) {
  std::vector<SpanningTree> out;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int k = n - 1;
  if (k > m) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (out.size() < limit) {
    try {
      out.push_back(spanning_tree_from_edges(g, pick));
    } catch (const Disconnected&) {
    }
    // next k-combination of 0..m-1
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

ExponentMatrix scaling_exponents(const CompartmentGraph& g, const SpanningTree& tree) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  ExponentMatrix f(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (std::size_t k = 1; k < tree.bfs_order.size(); ++k) {
    const Vertex child = tree.bfs_order[k];
    const int e = tree.parent_edge[static_cast<std::size_t>(child - 1)];
    const auto [s, d] = g.edge(e);
    auto& fc = f[static_cast<std::size_t>(child - 1)];
    if (child == s) {
      fc = f[static_cast<std::size_t>(d - 1)];
      fc[static_cast<std::size_t>(e)] += 1;
    } else {
      fc = f[static_cast<std::size_t>(s - 1)];
      fc[static_cast<std::size_t>(e)] -= 1;
    }
  }

  // The tree block of the scaling must be E_1^-1 (rows: vertices 2..n,
  // columns: tree edges).
  if (n > 1) {
    const auto k = static_cast<std::size_t>(n - 1);
    IntMatrix e1(k, k);
    for (std::size_t c = 0; c < k; ++c) {
      const auto [s, d] = g.edge(tree.edges[c]);
      if (s != 1) e1(static_cast<std::size_t>(s - 2), c) = 1;
      if (d != 1) e1(static_cast<std::size_t>(d - 2), c) = -1;
    }
    const IntMatrix c1 = inverse_unimodular(e1);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t v = 0; v < k; ++v) {
        if (c1(r, v) != f[v + 1][static_cast<std::size_t>(tree.edges[r])]) {
          throw InconsistentSystem("tree propagation disagrees with E_1^-1");
        }
      }
    }
  }
  return f;
}

ExponentMatrix rescaled_exponent_matrix(const CompartmentGraph& g, const ExponentMatrix& f) {
  const int m = g.edge_count();
  ExponentMatrix rows;
  rows.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    const auto [s, d] = g.edge(e);
    std::vector<int> row = unit(m, e);
    for (int k = 0; k < m; ++k) {
      row[static_cast<std::size_t>(k)] +=
          f[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(k)] - f[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(k)];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CycleBasis make_cycle_basis(const CompartmentGraph& g, const SpanningTree& tree, CycleSet cycles) {
  CycleBasis b;
  b.cycles = std::move(cycles);
  const auto m = static_cast<std::size_t>(g.edge_count());
  const std::size_t k = b.cycles.size();
  b.m = IntMatrix(m, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (int e : b.cycles[c].edge_indices) b.m(static_cast<std::size_t>(e), c) = 1;
  }
  for (std::size_t e = 0; e < m; ++e) {
    (tree.contains(static_cast<int>(e)) ? b.tree_rows : b.non_tree_rows).push_back(e);
  }
  b.m2 = IntMatrix(b.non_tree_rows.size(), k);
  for (std::size_t r = 0; r < b.non_tree_rows.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) b.m2(r, c) = b.m(b.non_tree_rows[r], c);
  return b;
}

namespace {

BigInt complement_determinant(const CompartmentGraph& g, const SpanningTree& tree, const CycleSet& cycles) {
  const CycleBasis b = make_cycle_basis(g, tree, cycles);
  if (b.m2.rows() != b.m2.cols()) return 0;
  return abs(determinant(b.m2));
}

}  // namespace

CycleBasis cycle_basis(const CompartmentGraph& g, const SpanningTree& tree) {
  const std::size_t k = static_cast<std::size_t>(g.edge_count() - g.vertex_count() + 1);
  CycleSet candidates;
  for (const Cycle& c : elementary_cycles(g)) {
    if (c.length() >= 2) candidates.push_back(c);
  }
  CycleSet chosen = independent_cycles(g, candidates);
  if (chosen.size() != k) {
    throw BasisNotFound("found " + std::to_string(chosen.size()) + " independent cycles, need " + std::to_string(k));
  }

  BigInt best = complement_determinant(g, tree, chosen);
  // Swap descent on |det M2|.
  bool improved = best != 1;
  while (improved && best != 1) {
    improved = false;
    for (std::size_t slot = 0; slot < k && !improved; ++slot) {
      for (const Cycle& c : candidates) {
        if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
        CycleSet trial = chosen;
        trial[slot] = c;
        const BigInt det = complement_determinant(g, tree, trial);
        if (det != 0 && det < best) {
          chosen = std::move(trial);
          best = det;
          improved = true;
          break;
        }
      }
    }
  }
  if (best == 1) return make_cycle_basis(g, tree, std::move(chosen));

  // Exhaustive search over k-subsets in canonical order.
  const std::size_t total = candidates.size();
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    CycleSet trial;
    for (std::size_t i : pick) trial.push_back(candidates[i]);
    if (complement_determinant(g, tree, trial) == 1) return make_cycle_basis(g, tree, std::move(trial));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == total - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw InconsistentSystem("no directed-cycle basis has a unimodular block off the spanning tree");
}

std::vector<CycleExpression> express_in_cycles(const CompartmentGraph& g, const SpanningTree& tree,
                                               const CycleBasis& basis, const ExponentMatrix& rescaled) {
  std::vector<CycleExpression> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree.contains(e)) continue;
    const auto& row = rescaled[static_cast<std::size_t>(e)];
    std::vector<BigInt> u(row.begin(), row.end());
    std::vector<BigInt> z;
    try {
      z = integer_solve_in_lattice(basis.m, u, basis.non_tree_rows);
    } catch (const NotUnimodular& err) {
      throw InconsistentSystem(std::string("cycle basis cannot express the rescaling: ") + err.what());
    } catch (const NotSquare& err) {
      throw InconsistentSystem(std::string("cycle basis has the wrong size: ") + err.what());
    }
    CycleExpression expr{e, {}};
    for (const BigInt& x : z) expr.z.push_back(to_small_int(x));
    out.push_back(std::move(expr));
  }
  return out;
}

ScalingReparametrization build_reparametrization(const CompartmentGraph& g, const SpanningTree& tree) {
  ScalingReparametrization r;
  r.tree = tree;
  r.f_exponents = scaling_exponents(g, tree);
  r.rescaled_exponents = rescaled_exponent_matrix(g, r.f_exponents);
  r.basis = cycle_basis(g, tree);
  r.expressions = express_in_cycles(g, tree, r.basis, r.rescaled_exponents);
  return r;
}

ReparamResult reparametrize(const CompartmentGraph& g, const ReparamOptions& options) {
  if (!is_strongly_connected(g)) throw NotStronglyConnected("reparametrization requires a strongly connected graph");
  if (g.edge_count() > 2 * g.vertex_count() - 2) {
    throw TooManyEdges("m = " + std::to_string(g.edge_count()) + " exceeds 2n-2 = " +
                       std::to_string(2 * g.vertex_count() - 2));
  }
  ReparamResult result;
  result.dimension = image_dimension(g, options.dimension);
  if (!result.dimension.verdict) return result;
  const SpanningTree tree = options.tree_edges ? spanning_tree_from_edges(g, *options.tree_edges) : spanning_tree(g);
  ScalingReparametrization r = build_reparametrization(g, tree);
  const VerificationReport check = verify_reparametrization(g, r, options.dimension.seed);
  if (!check.ok) throw InconsistentSystem("reparametrization failed verification: " + check.failures.front());
  result.reparametrization = std::move(r);
  return result;
}

namespace {

Fp eval_edge_monomial(const std::vector<int>& exps, const std::vector<Fp>& point, int n) {
  Fp acc = Fp::from_int(1);
  for (std::size_t e = 0; e < exps.size(); ++e) {
    const int x = exps[e];
    if (x == 0) continue;
    const Fp base = point[static_cast<std::size_t>(n) + e];
    const Fp p = base.pow(static_cast<std::uint64_t>(x < 0 ? -x : x));
    acc *= x < 0 ? p.inverse() : p;
  }
  return acc;
}

}  // namespace

VerificationReport verify_reparametrization(const CompartmentGraph& g, const ScalingReparametrization& r,
                                            std::uint64_t seed) {
  VerificationReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failures.push_back(std::move(why));
  };
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto um = static_cast<std::size_t>(m);

  if (r.f_exponents.size() != static_cast<std::size_t>(n) || r.rescaled_exponents.size() != um) {
    fail("shape: exponent tables have the wrong size");
    return report;
  }
  if (std::any_of(r.f_exponents[0].begin(), r.f_exponents[0].end(), [](int x) { return x != 0; })) {
    fail("(i) f_1 is not the constant 1");
  }
  for (std::size_t v = 0; v < r.f_exponents.size(); ++v) {
    for (int e = 0; e < m; ++e) {
      if (r.f_exponents[v][static_cast<std::size_t>(e)] != 0 && !r.tree.contains(e)) {
        fail("(i) f_" + std::to_string(v + 1) + " uses a non-tree edge");
      }
    }
  }
  for (int e : r.tree.edges) {
    const auto& row = r.rescaled_exponents[static_cast<std::size_t>(e)];
    if (std::any_of(row.begin(), row.end(), [](int x) { return x != 0; })) {
      fail("(i) tree edge " + g.parameter_name(g.edge_parameter(e)) + " is not rescaled to 1");
    }
  }
  if (rescaled_exponent_matrix(g, r.f_exponents) != r.rescaled_exponents) {
    fail("(i) rescaled rows do not match the scaling exponents");
  }

  // (ii) every non-tree row equals M z exactly.
  const std::size_t k = r.basis.cycles.size();
  for (const CycleExpression& expr : r.expressions) {
    if (expr.z.size() != k || r.basis.m.cols() != k || r.basis.m.rows() != um) {
      fail("(ii) expression for edge " + std::to_string(expr.edge) + " has the wrong length");
      continue;
    }
    for (std::size_t row = 0; row < um; ++row) {
      BigInt acc = 0;
      for (std::size_t c = 0; c < k; ++c) acc += r.basis.m(row, c) * expr.z[c];
      if (acc != r.rescaled_exponents[static_cast<std::size_t>(expr.edge)][row]) {
        fail("(ii) M z differs from the rescaled row of " + g.parameter_name(g.edge_parameter(expr.edge)));
        break;
      }
    }
  }
  for (int e = 0; e < m; ++e) {
    if (r.tree.contains(e)) continue;
    const bool covered = std::any_of(r.expressions.begin(), r.expressions.end(),
                                     [&](const CycleExpression& x) { return x.edge == e; });
    if (!covered) fail("(ii) no cycle expression for " + g.parameter_name(g.edge_parameter(e)));
  }

  // (iii) D A D^-1 built from the rescaled monomials keeps both characteristic polynomials.
  std::mt19937_64 rng(mix_seed(seed, 0x5eed));
  for (int trial = 0; trial < 3; ++trial) {
    const auto point = random_point<Fp>(static_cast<std::size_t>(g.parameter_count()), rng);
    std::vector<Fp> scaled = point;
    for (int e = 0; e < m; ++e) {
      const auto [s, d] = g.edge(e);
      const Fp own = point[static_cast<std::size_t>(g.edge_parameter(e))];
      const Fp entry = eval_edge_monomial(r.rescaled_exponents[static_cast<std::size_t>(e)], point, n);
      const Fp via_f = own * eval_edge_monomial(r.f_exponents[static_cast<std::size_t>(d - 1)], point, n) /
                       eval_edge_monomial(r.f_exponents[static_cast<std::size_t>(s - 1)], point, n);
      if (entry != via_f) fail("(iii) rescaled entry differs from a_ij f_i / f_j");
      scaled[static_cast<std::size_t>(g.edge_parameter(e))] = entry;
    }
    if (numeric_coefficients<Fp>(g, point) != numeric_coefficients<Fp>(g, scaled)) {
      fail("(iii) double characteristic polynomial changed under the rescaling");
    }
  }
  return report;
}

namespace {

template <typename S>
int reparam_rank(const CompartmentGraph& g, const ScalingReparametrization& r, const DimensionOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<bool> free(static_cast<std::size_t>(g.parameter_count()), true);
  for (int e : r.tree.edges) free[static_cast<std::size_t>(g.edge_parameter(e))] = false;
  int best = 0;
  for (int t = 0; t < std::max(1, options.trials); ++t) {
    auto point = random_point<S>(free.size(), rng);
    for (int e : r.tree.edges) point[static_cast<std::size_t>(g.edge_parameter(e))] = scalar_from_int<S>(1);
    best = std::max(best, static_cast<int>(rank(jacobian<S>(g, point, free))));
  }
  return best;
}

}  // namespace

int reparametrized_dimension(const CompartmentGraph& g, const ScalingReparametrization& r,
                             const DimensionOptions& options) {
  return options.mode == ArithmeticMode::PrimeField ? reparam_rank<Fp>(g, r, options)
                                                    : reparam_rank<Rational>(g, r, options);
}

std::string edge_monomial(const CompartmentGraph& g, const std::vector<int>& edge_exponents) {
  return format_monomial(edge_exponents,
                         [&](std::size_t e) { return g.parameter_name(g.edge_parameter(static_cast<int>(e))); });
}

std::vector<std::vector<std::string>> reparametrized_matrix(const CompartmentGraph& g,
                                                            const ScalingReparametrization& r) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::string>> out(n, std::vector<std::string>(n, "0"));
  for (std::size_t v = 0; v < n; ++v) out[v][v] = g.parameter_name(static_cast<int>(v));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [s, d] = g.edge(e);
    out[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(s - 1)] =
        edge_monomial(g, r.rescaled_exponents[static_cast<std::size_t>(e)]);
  }
  return out;
}

}  // namespace compid
