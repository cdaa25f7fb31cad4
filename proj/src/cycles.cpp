#include "compid/cycles.hpp"

#include <algorithm>
#include <bit>

#include "compid/matrix.hpp"

namespace compid {

std::vector<int> Cycle::exponent_vector(const CompartmentGraph& g) const {
  std::vector<int> v(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : edge_indices) v[static_cast<std::size_t>(e)] = 1;
  return v;
}

std::vector<int> Cycle::monomial_exponents(const CompartmentGraph& g) const {
  std::vector<int> v(static_cast<std::size_t>(g.parameter_count()), 0);
  if (vertices.size() == 1) {
    v[static_cast<std::size_t>(CompartmentGraph::diagonal_parameter(vertices.front()))] = 1;
  } else {
    for (int e : edge_indices) v[static_cast<std::size_t>(g.edge_parameter(e))] = 1;
  }
  return v;
}

CycleSet elementary_cycles(const CompartmentGraph& g) {
  const int n = g.vertex_count();
  CycleSet out;
  for (Vertex v = 1; v <= n; ++v) out.push_back({{v}, {}});

  // Each cycle is found exactly once, from its smallest vertex, by a DFS
  // restricted to larger vertices.
  std::vector<Vertex> path;
  std::vector<int> path_edges;
  std::uint32_t on_path = 0;
  auto dfs = [&](auto&& self, Vertex start, Vertex current) -> void {
    for (std::uint32_t next = g.out_neighbours(current); next != 0; next &= next - 1) {
      const Vertex w = std::countr_zero(next) + 1;
      const int e = *g.edge_index(current, w);
      if (w == start) {
        std::vector<int> edges = path_edges;
        edges.push_back(e);
        out.push_back({path, std::move(edges)});
      } else if (w > start && !(on_path & (std::uint32_t{1} << (w - 1)))) {
        path.push_back(w);
        path_edges.push_back(e);
        on_path |= std::uint32_t{1} << (w - 1);
        self(self, start, w);
        on_path &= ~(std::uint32_t{1} << (w - 1));
        path_edges.pop_back();
        path.pop_back();
      }
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    path = {s};
    path_edges.clear();
    on_path = std::uint32_t{1} << (s - 1);
    dfs(dfs, s, s);
  }

  std::stable_sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

CycleSet independent_cycles(const CompartmentGraph& g, const CycleSet& cycles) {
  CycleSet kept;
  std::vector<std::vector<int>> rows;
  for (const Cycle& c : cycles) {
    if (c.length() < 2) continue;
    rows.push_back(c.exponent_vector(g));
    if (rank(to_int_matrix(rows, static_cast<std::size_t>(g.edge_count()))) == rows.size()) {
      kept.push_back(c);
    } else {
      rows.pop_back();
    }
  }
  return kept;
}

}  // namespace compid
