#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "compid/census.hpp"
#include "compid/charpoly.hpp"
#include "compid/graph.hpp"
#include "compid/reparam.hpp"

namespace compid {

/// Key order is preserved so output is byte-stable.
using Json = nlohmann::ordered_json;

/// {"n": <int>, "edges": [[j,i], ...]}. Throws MalformedInput on syntax or
/// shape errors and InvalidEdge on bad edges.
CompartmentGraph parse_graph(std::string_view text);
CompartmentGraph graph_from_json(const Json& doc);
Json graph_to_json(const CompartmentGraph& g);

/// "[[j,i],...]" naming edges of `g`; returns their indices. Throws
/// MalformedInput or InvalidEdge when an edge is not in the graph.
std::vector<int> parse_edge_list(std::string_view text, const CompartmentGraph& g);

/// Inverse of format_monomial for the given variable names.
std::vector<int> parse_monomial(std::string_view text, const std::vector<std::string>& names);

Json dimension_report_json(const DimensionReport& report);

/// Tree edges, f, the reparametrized matrix, the cycle basis and each
/// non-tree edge in terms of the basis cycles q1, q2, ..., plus the graph so
/// the document can be re-read on its own.
Json reparametrization_json(const CompartmentGraph& g, const ScalingReparametrization& r);

struct ParsedReparametrization {
  CompartmentGraph graph;
  ScalingReparametrization reparametrization;
};

/// Rebuilds a reparametrization from its JSON document. Throws MalformedInput.
ParsedReparametrization reparametrization_from_json(const Json& doc);

Json census_row_json(const CensusRow& row, bool detail);
Json conjecture_reports_json(const std::vector<ConjectureReport>& reports);

}  // namespace compid
