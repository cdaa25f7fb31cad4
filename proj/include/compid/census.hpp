#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compid/charpoly.hpp"
#include "compid/graph.hpp"

namespace compid {

struct CensusOptions {
  std::uint64_t seed = 0;
  int trials = 2;
  ArithmeticMode mode = ArithmeticMode::PrimeField;
  int max_vertices = 5;  // enumeration guardrail
};

/// Dimension options for one graph: the seed is mixed with the hash of the
/// graph's canonical form, so results do not depend on enumeration order.
DimensionOptions graph_dimension_options(const CompartmentGraph& g, const CensusOptions& options);

/// Candidate edges for n vertices, (source, target) in lexicographic order.
std::vector<Edge> candidate_edges(int n);

/// All strongly connected graphs with n vertices and m edges, as m-subsets of
/// candidate_edges(n) in lexicographic order. Throws LimitExceeded when n is
/// above options.max_vertices, MalformedInput when m is out of range.
std::vector<CompartmentGraph> enumerate_sc_graphs(int n, int m, const CensusOptions& options = {});

/// One symmetry class (orbit under permutations of 2..n).
struct CensusClass {
  std::string canonical;
  CompartmentGraph representative;  // first member in enumeration order
  std::vector<CompartmentGraph> members;
  bool expected = false;
  bool exchange = false;
  bool isc = false;
};

struct CensusRow {
  int n = 0;
  int m = 0;
  std::uint64_t a = 0;  // strongly connected graphs
  std::uint64_t b = 0;  // ... with the expected dimension
  std::uint64_t c = 0;  // symmetry classes
  std::optional<std::uint64_t> d;  // classes with an exchange (m = 2n-2 only)
  std::uint64_t e = 0;  // classes with the expected dimension
  std::optional<std::uint64_t> f;  // inductively strongly connected classes (m = 2n-2 only)
  std::vector<CensusClass> classes;  // sorted by canonical form
};

/// OpenMP census: verdicts are computed once per class representative and a
/// deterministic 1% of the other members is re-checked (relabelling
/// equivariance); a disagreement throws.
CensusRow census_row(int n, int m, const CensusOptions& options = {});

/// Serial reference: every graph gets its own dimension computation.
CensusRow census_row_reference(int n, int m, const CensusOptions& options = {});

/// "n,m,A,B,C,D,E,F" with empty cells for absent columns.
std::string census_csv_header();
std::string census_csv_line(const CensusRow& row);

/// Representatives of classes with the expected dimension that are not
/// inductively strongly connected. Requires m = 2n-2 (empty otherwise).
std::vector<CompartmentGraph> non_isc_identifiable_classes(int n, int m, const CensusOptions& options = {});

struct Counterexample {
  CompartmentGraph graph;
  Vertex exchange = 0;
  CompartmentGraph collapsed;
  bool graph_expected = false;
  bool collapsed_expected = false;
};

struct ConjectureReport {
  std::string id;  // "collapse-2n-4" or "collapse-n-1"
  std::uint64_t tested = 0;
  std::vector<Counterexample> counterexamples;
};

/// Collapses every exchange of every strongly connected graph with n vertices
/// and n <= m <= 2n-2 edges and compares expected-dimension verdicts whenever
/// the collapsed graph meets a conjecture's hypothesis. Mismatches are
/// reported, never thrown.
std::vector<ConjectureReport> test_conjectures(int n, const CensusOptions& options = {});

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string detail;
};

/// Proven structural statements checked exhaustively for 1..n_max vertices.
std::vector<PropertyResult> property_suite(int n_max, const CensusOptions& options = {});

/// Outcome of building and verifying reparametrizations over a census row.
struct ReparamSweep {
  std::uint64_t graphs = 0;          // graphs with the expected dimension
  std::uint64_t verified = 0;        // (graph, tree) pairs that verified
  std::uint64_t single_tree = 0;     // graphs with only one spanning tree
  std::vector<std::string> failures;
};

/// For every graph of the row with the expected dimension, builds the scaling
/// reparametrization on `trees_per_graph` distinct spanning trees (fewer if
/// the graph has fewer) and verifies each.
ReparamSweep sweep_reparametrizations(const CensusRow& row, int trees_per_graph, const CensusOptions& options = {});

}  // namespace compid
