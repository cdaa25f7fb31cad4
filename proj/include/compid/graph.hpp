#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace compid {

/// 1-based compartment label. Vertex 1 is always the input/output compartment.
using Vertex = int;

/// A directed edge source -> target. It carries the rate parameter
/// a_{target,source}, matching the matrix convention A_{ij} for an edge j -> i.
struct Edge {
  Vertex source = 0;
  Vertex target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph of a linear compartment model.
///
/// Edge order is fixed at construction and defines the column order of every
/// derived matrix and the order of the edge parameters. Every vertex carries
/// an implicit diagonal parameter a_{ii}. Parameter indices run over the
/// diagonal parameters first (vertex order) and then the edge parameters
/// (edge order), n + m in total.
class CompartmentGraph {
 public:
  static constexpr int kMaxVertices = 16;

  /// The one-compartment model.
  CompartmentGraph();

  /// Throws InvalidEdge on out-of-range endpoints, self-loops or duplicates,
  /// MalformedInput when n is outside [1, kMaxVertices].
  CompartmentGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int parameter_count() const { return n_ + edge_count(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  bool has_edge(Vertex source, Vertex target) const;
  std::optional<int> edge_index(Vertex source, Vertex target) const;

  /// Bit (v-1) is set when v is an out-/in-neighbour.
  std::uint32_t out_neighbours(Vertex v) const { return out_[static_cast<std::size_t>(v - 1)]; }
  std::uint32_t in_neighbours(Vertex v) const { return in_[static_cast<std::size_t>(v - 1)]; }

  static int diagonal_parameter(Vertex v) { return v - 1; }
  int edge_parameter(int edge_index) const { return n_ + edge_index; }

  /// "a<i><j>" for parameter index p, e.g. "a12" for the edge 2 -> 1 ("a<i>_<j>" when n >= 10).
  std::string parameter_name(int p) const;

  friend bool operator==(const CompartmentGraph& a, const CompartmentGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> in_;
  std::vector<int> index_;  // n*n table, -1 when absent
};

/// Ordering of the vertices, starting at 1, whose every prefix induces a
/// strongly connected subgraph.
struct IscCertificate {
  std::vector<Vertex> ordering;
};

std::uint32_t all_vertices_mask(int n);

/// Vertices reachable from `from` using only vertices in `within`.
std::uint32_t forward_reach(const CompartmentGraph& g, Vertex from, std::uint32_t within);
std::uint32_t backward_reach(const CompartmentGraph& g, Vertex from, std::uint32_t within);

bool is_strongly_connected(const CompartmentGraph& g);
bool induces_strongly_connected(const CompartmentGraph& g, std::uint32_t vertices);

/// Number of connected components of the underlying undirected graph.
int weak_component_count(const CompartmentGraph& g);

/// Induced subgraph on the given vertices, relabelled 1..k in increasing order.
/// Edges keep their relative order.
CompartmentGraph induced_subgraph(const CompartmentGraph& g, std::span<const Vertex> vertices);

/// Induced subgraph on the strongly connected component of vertex 1.
CompartmentGraph io_strong_component(const CompartmentGraph& g);

/// Smallest i > 1 with both 1 -> i and i -> 1.
std::optional<Vertex> has_exchange(const CompartmentGraph& g);
std::vector<Vertex> exchange_vertices(const CompartmentGraph& g);

std::optional<IscCertificate> is_inductively_strongly_connected(const CompartmentGraph& g);
bool is_valid_isc_certificate(const CompartmentGraph& g, const IscCertificate& cert);

/// Identify vertex 1 with its exchange partner `partner`. Throws NoExchange if
/// 1 <-> partner is not an exchange.
CompartmentGraph collapse_exchange_at(const CompartmentGraph& g, Vertex partner);
/// Collapse at the smallest exchange vertex. Throws NoExchange.
CompartmentGraph collapse_exchange(const CompartmentGraph& g);

/// New input/output vertex 1 attached to the old vertex 1 (now 2) by an
/// exchange. Old edges come first, shifted, followed by 1 -> 2 and 2 -> 1.
CompartmentGraph add_exchange_vertex(const CompartmentGraph& g);

/// The directed n-cycle 1 -> 2 -> ... -> n -> 1.
CompartmentGraph directed_cycle(int n);

}  // namespace compid
