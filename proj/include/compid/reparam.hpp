#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compid/charpoly.hpp"
#include "compid/cycles.hpp"
#include "compid/graph.hpp"
#include "compid/matrix.hpp"

namespace compid {

/// Rows of small integer exponents; each row is indexed by edge.
using ExponentMatrix = std::vector<std::vector<int>>;

/// Spanning tree of the underlying undirected graph, rooted at vertex 1.
struct SpanningTree {
  std::vector<int> edges;         // edge indices, in discovery order
  std::vector<int> parent_edge;   // per vertex (index v-1); -1 at the root
  std::vector<Vertex> bfs_order;  // root first, each vertex after its parent

  bool contains(int edge) const;
};

/// Grows a tree from vertex 1 by sweeping the edge list in order, taking every
/// edge with exactly one endpoint already in the tree, until all vertices are
/// covered. Throws Disconnected.
SpanningTree spanning_tree(const CompartmentGraph& g);

/// Tree from an explicit edge set. Throws InvalidEdge for bad indices and
/// Disconnected if the edges do not form a spanning tree.
SpanningTree spanning_tree_from_edges(const CompartmentGraph& g, const std::vector<int>& edges);

/// Up to `limit` distinct spanning trees, edge subsets in lexicographic order.
std::vector<SpanningTree> enumerate_spanning_trees(const CompartmentGraph& g, std::size_t limit);

/// Per-vertex exponent vectors over the edges: f_1 = 0 and, across each tree
/// edge v -> u, f_v = f_u + unit(edge) when v is the child, f_u = f_v - unit(edge)
/// when u is. Cross-checked against the columns of E_1^-1.
ExponentMatrix scaling_exponents(const CompartmentGraph& g, const SpanningTree& tree);

/// Row per edge j -> i: unit(edge) + f_i - f_j, the exponents of a_ij f_i / f_j.
ExponentMatrix rescaled_exponent_matrix(const CompartmentGraph& g, const ExponentMatrix& f);

/// m - n + 1 independent directed cycles and their exponent matrix M (m rows
/// in edge order), split into tree rows and the square block M2 on the
/// remaining rows.
struct CycleBasis {
  CycleSet cycles;
  IntMatrix m;
  std::vector<std::size_t> tree_rows;
  std::vector<std::size_t> non_tree_rows;
  IntMatrix m2;
};

/// Basis from a given cycle list; no unimodularity requirement.
CycleBasis make_cycle_basis(const CompartmentGraph& g, const SpanningTree& tree, CycleSet cycles);

/// Greedy basis in canonical cycle order. If its M2 block is not unimodular,
/// single-cycle swaps that shrink |det M2| are tried, then an exhaustive search
/// over cycle subsets. Throws BasisNotFound when fewer than m-n+1 independent
/// cycles exist and InconsistentSystem when no unimodular basis is found.
CycleBasis cycle_basis(const CompartmentGraph& g, const SpanningTree& tree);

/// Exponents z over the basis cycles for one non-tree edge.
struct CycleExpression {
  int edge = 0;
  std::vector<int> z;
};

/// For each non-tree edge, z = M2^-1 u2 with u its rescaled row, checked
/// against all rows. Throws InconsistentSystem.
std::vector<CycleExpression> express_in_cycles(const CompartmentGraph& g, const SpanningTree& tree,
                                               const CycleBasis& basis, const ExponentMatrix& rescaled);

struct ScalingReparametrization {
  SpanningTree tree;
  ExponentMatrix f_exponents;        // n rows
  ExponentMatrix rescaled_exponents; // m rows
  CycleBasis basis;
  std::vector<CycleExpression> expressions;
};

struct ReparamOptions {
  DimensionOptions dimension;
  std::optional<std::vector<int>> tree_edges;
};

struct ReparamResult {
  DimensionReport dimension;
  std::optional<ScalingReparametrization> reparametrization;  // empty: none exists
};

/// Decides existence by image dimension and builds the monomial scaling when
/// d = m + 1. Throws NotStronglyConnected or TooManyEdges.
ReparamResult reparametrize(const CompartmentGraph& g, const ReparamOptions& options = {});

/// The scaling for a given tree, without the dimension test.
ScalingReparametrization build_reparametrization(const CompartmentGraph& g, const SpanningTree& tree);

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Structural checks (tree rows vanish, rows match the scaling, rows equal M z)
/// and a numeric check over F_p that the reparametrized matrix has the same
/// double characteristic polynomial as A at three random points.
VerificationReport verify_reparametrization(const CompartmentGraph& g, const ScalingReparametrization& r,
                                            std::uint64_t seed = 0);

/// Jacobian rank of the reparametrized model in its own parameters (the n
/// diagonals and the m-n+1 surviving entries; tree entries fixed at 1).
int reparametrized_dimension(const CompartmentGraph& g, const ScalingReparametrization& r,
                             const DimensionOptions& options = {});

/// Reparametrized matrix: "0" off the graph, "1" on tree edges, the diagonal
/// name on the diagonal, the rescaled monomial elsewhere.
std::vector<std::vector<std::string>> reparametrized_matrix(const CompartmentGraph& g,
                                                            const ScalingReparametrization& r);

/// Monomial string over the edge parameters of `g`.
std::string edge_monomial(const CompartmentGraph& g, const std::vector<int>& edge_exponents);

}  // namespace compid
