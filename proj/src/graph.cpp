#include "compid/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "compid/errors.hpp"

namespace compid {

namespace {

constexpr std::uint32_t bit(Vertex v) { return std::uint32_t{1} << (v - 1); }

}  // namespace

CompartmentGraph::CompartmentGraph() : CompartmentGraph(1, {}) {}

CompartmentGraph::CompartmentGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxVertices) {
    throw MalformedInput("vertex count " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxVertices) + "]");
  }
  const auto un = static_cast<std::size_t>(n);
  out_.assign(un, 0);
  in_.assign(un, 0);
  index_.assign(un * un, -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [s, t] = edges_[e];
    if (s < 1 || s > n || t < 1 || t > n) {
      throw InvalidEdge("edge [" + std::to_string(s) + "," + std::to_string(t) +
                        "] has a vertex outside 1.." + std::to_string(n));
    }
    if (s == t) {
      throw InvalidEdge("self-loop at vertex " + std::to_string(s));
    }
    auto& slot = index_[static_cast<std::size_t>(s - 1) * un + static_cast<std::size_t>(t - 1)];
    if (slot != -1) {
      throw InvalidEdge("duplicate edge [" + std::to_string(s) + "," + std::to_string(t) + "]");
    }
    slot = static_cast<int>(e);
    out_[static_cast<std::size_t>(s - 1)] |= bit(t);
    in_[static_cast<std::size_t>(t - 1)] |= bit(s);
  }
}

bool CompartmentGraph::has_edge(Vertex source, Vertex target) const {
  return edge_index(source, target).has_value();
}

std::optional<int> CompartmentGraph::edge_index(Vertex source, Vertex target) const {
  if (source < 1 || source > n_ || target < 1 || target > n_) return std::nullopt;
  const int e = index_[static_cast<std::size_t>(source - 1) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(target - 1)];
  if (e < 0) return std::nullopt;
  return e;
}

std::string CompartmentGraph::parameter_name(int p) const {
  // Two-digit labels would make "a<i><j>" ambiguous, so they get a separator.
  const std::string sep = n_ >= 10 ? "_" : "";
  if (p < n_) {
    const auto v = std::to_string(p + 1);
    return "a" + v + sep + v;
  }
  const Edge& e = edge(p - n_);
  return "a" + std::to_string(e.target) + sep + std::to_string(e.source);
}

std::uint32_t all_vertices_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

namespace {

template <typename Step>
std::uint32_t reach(Vertex from, std::uint32_t within, Step step) {
  std::uint32_t seen = bit(from) & within;
  std::uint32_t frontier = seen;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
      const Vertex v = std::countr_zero(f) + 1;
      next |= step(v);
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

std::uint32_t forward_reach(const CompartmentGraph& g, Vertex from, std::uint32_t within) {
  return reach(from, within, [&](Vertex v) { return g.out_neighbours(v); });
}

std::uint32_t backward_reach(const CompartmentGraph& g, Vertex from, std::uint32_t within) {
  return reach(from, within, [&](Vertex v) { return g.in_neighbours(v); });
}

bool induces_strongly_connected(const CompartmentGraph& g, std::uint32_t vertices) {
  if (vertices == 0) return false;
  const Vertex root = std::countr_zero(vertices) + 1;
  return forward_reach(g, root, vertices) == vertices && backward_reach(g, root, vertices) == vertices;
}

bool is_strongly_connected(const CompartmentGraph& g) {
  return induces_strongly_connected(g, all_vertices_mask(g.vertex_count()));
}

int weak_component_count(const CompartmentGraph& g) {
  const std::uint32_t all = all_vertices_mask(g.vertex_count());
  std::uint32_t unseen = all;
  int components = 0;
  while (unseen != 0) {
    const Vertex v = std::countr_zero(unseen) + 1;
    unseen &= ~reach(v, all, [&](Vertex u) { return g.out_neighbours(u) | g.in_neighbours(u); });
    ++components;
  }
  return components;
}

CompartmentGraph induced_subgraph(const CompartmentGraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t k = 0; k < sorted.size(); ++k) relabel[static_cast<std::size_t>(sorted[k])] = static_cast<int>(k) + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int s = relabel[static_cast<std::size_t>(e.source)];
    const int t = relabel[static_cast<std::size_t>(e.target)];
    if (s != 0 && t != 0) edges.push_back({s, t});
  }
  return CompartmentGraph(static_cast<int>(sorted.size()), std::move(edges));
}

CompartmentGraph io_strong_component(const CompartmentGraph& g) {
  const std::uint32_t all = all_vertices_mask(g.vertex_count());
  const std::uint32_t scc = forward_reach(g, 1, all) & backward_reach(g, 1, all);
  if (scc == all) return g;
  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (scc & bit(v)) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<Vertex> exchange_vertices(const CompartmentGraph& g) {
  std::vector<Vertex> out;
  const std::uint32_t both = g.out_neighbours(1) & g.in_neighbours(1);
  for (std::uint32_t b = both; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::optional<Vertex> has_exchange(const CompartmentGraph& g) {
  const std::uint32_t both = g.out_neighbours(1) & g.in_neighbours(1);
  if (both == 0) return std::nullopt;
  return std::countr_zero(both) + 1;
}

std::optional<IscCertificate> is_inductively_strongly_connected(const CompartmentGraph& g) {
  const int n = g.vertex_count();
  const std::uint32_t all = all_vertices_mask(n);
  std::vector<bool> dead(std::size_t{1} << n, false);
  std::vector<Vertex> order{1};

  // Depth-first over prefixes; `dead` memoizes prefixes with no completion.
  std::function<bool(std::uint32_t)> extend = [&](std::uint32_t prefix) -> bool {
    if (prefix == all) return true;
    if (dead[prefix]) return false;
    for (Vertex v = 2; v <= n; ++v) {
      if (prefix & bit(v)) continue;
      const std::uint32_t grown = prefix | bit(v);
      if (!induces_strongly_connected(g, grown)) continue;
      order.push_back(v);
      if (extend(grown)) return true;
      order.pop_back();
    }
    dead[prefix] = true;
    return false;
  };

  if (!extend(bit(1))) return std::nullopt;
  return IscCertificate{order};
}

bool is_valid_isc_certificate(const CompartmentGraph& g, const IscCertificate& cert) {
  const auto& o = cert.ordering;
  if (static_cast<int>(o.size()) != g.vertex_count() || o.empty() || o.front() != 1) return false;
  std::uint32_t prefix = 0;
  for (Vertex v : o) {
    if (v < 1 || v > g.vertex_count() || (prefix & bit(v))) return false;
    prefix |= bit(v);
    if (!induces_strongly_connected(g, prefix)) return false;
  }
  return true;
}

CompartmentGraph collapse_exchange_at(const CompartmentGraph& g, Vertex partner) {
  if (partner <= 1 || !g.has_edge(1, partner) || !g.has_edge(partner, 1)) {
    throw NoExchange("vertex " + std::to_string(partner) + " is not an exchange partner of vertex 1");
  }
  const int n = g.vertex_count();
  std::vector<int> relabel(static_cast<std::size_t>(n) + 1, 0);
  int next = 1;
  for (Vertex v = 1; v <= n; ++v) {
    if (v == partner) continue;
    relabel[static_cast<std::size_t>(v)] = next++;
  }
  relabel[static_cast<std::size_t>(partner)] = 1;

  std::vector<Edge> edges;
  std::vector<bool> present(static_cast<std::size_t>(n * n), false);
  for (const Edge& e : g.edges()) {
    const int s = relabel[static_cast<std::size_t>(e.source)];
    const int t = relabel[static_cast<std::size_t>(e.target)];
    if (s == t) continue;
    const auto key = static_cast<std::size_t>((s - 1) * n + (t - 1));
    if (present[key]) continue;
    present[key] = true;
    edges.push_back({s, t});
  }
  return CompartmentGraph(n - 1, std::move(edges));
}

CompartmentGraph collapse_exchange(const CompartmentGraph& g) {
  const auto partner = has_exchange(g);
  if (!partner) throw NoExchange("graph has no exchange at vertex 1");
  return collapse_exchange_at(g, *partner);
}

CompartmentGraph add_exchange_vertex(const CompartmentGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + 2);
  for (const Edge& e : g.edges()) edges.push_back({e.source + 1, e.target + 1});
  edges.push_back({1, 2});
  edges.push_back({2, 1});
  return CompartmentGraph(g.vertex_count() + 1, std::move(edges));
}

CompartmentGraph directed_cycle(int n) {
  std::vector<Edge> edges;
  if (n >= 2) {
    for (Vertex v = 1; v <= n; ++v) edges.push_back({v, v % n + 1});
  }
  return CompartmentGraph(n, std::move(edges));
}

}  // namespace compid
