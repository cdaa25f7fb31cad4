#pragma once

#include <vector>

#include "compid/graph.hpp"

namespace compid {

/// Elementary directed cycle. `vertices` is the traversal order, rotated so the
/// smallest vertex leads; `edge_indices[k]` is the edge vertices[k] ->
/// vertices[k+1] (wrapping). A one-cycle has a single vertex and no edges and
/// stands for the diagonal parameter.
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<int> edge_indices;

  int length() const { return static_cast<int>(vertices.size()); }

  /// 0/1 vector over the m edges. Zero for one-cycles.
  std::vector<int> exponent_vector(const CompartmentGraph& g) const;
  /// Exponents over all n + m parameters: the monomial a^C.
  std::vector<int> monomial_exponents(const CompartmentGraph& g) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

using CycleSet = std::vector<Cycle>;

/// All elementary cycles: the n one-cycles plus every directed cycle of
/// length >= 2, ordered by length and then by vertex sequence.
CycleSet elementary_cycles(const CompartmentGraph& g);

/// Greedy scan of the nontrivial cycles of `cycles` in order, keeping one iff
/// it raises the rational rank of the kept exponent vectors.
CycleSet independent_cycles(const CompartmentGraph& g, const CycleSet& cycles);

}  // namespace compid
