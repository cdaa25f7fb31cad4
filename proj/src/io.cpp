#include "compid/io.hpp"

#include <algorithm>
#include <charconv>

#include "compid/errors.hpp"

namespace compid {

namespace {

int as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
  return v.get<int>();
}

Json edge_json(const Edge& e) { return Json::array({e.source, e.target}); }

std::vector<std::string> edge_names(const CompartmentGraph& g) {
  std::vector<std::string> names;
  for (int e = 0; e < g.edge_count(); ++e) names.push_back(g.parameter_name(g.edge_parameter(e)));
  return names;
}

std::vector<std::string> cycle_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("q" + std::to_string(i));
  return names;
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::string as_string(const Json& v, const char* what) {
  if (!v.is_string()) throw MalformedInput(std::string(what) + " must be a string");
  return v.get<std::string>();
}

// Cycle through exactly the edges with exponent 1, rotated to its smallest vertex.
Cycle cycle_from_edges(const CompartmentGraph& g, const std::vector<int>& exps) {
  std::vector<int> edges;
  for (std::size_t e = 0; e < exps.size(); ++e) {
    if (exps[e] == 1) {
      edges.push_back(static_cast<int>(e));
    } else if (exps[e] != 0) {
      throw MalformedInput("cycle monomial has an exponent other than 1");
    }
  }
  if (edges.empty()) throw MalformedInput("empty cycle");
  Vertex start = g.vertex_count() + 1;
  for (int e : edges) start = std::min(start, g.edge(e).source);
  Cycle c;
  Vertex v = start;
  do {
    auto it = std::find_if(edges.begin(), edges.end(), [&](int e) { return g.edge(e).source == v; });
    if (it == edges.end() || c.vertices.size() >= edges.size()) throw MalformedInput("edges do not form a cycle");
    c.vertices.push_back(v);
    c.edge_indices.push_back(*it);
    v = g.edge(*it).target;
  } while (v != start);
  if (c.edge_indices.size() != edges.size()) throw MalformedInput("edges do not form a single cycle");
  return c;
}

}  // namespace

CompartmentGraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw MalformedInput("graph must be a JSON object");
  const int n = as_int(field(doc, "n"), "n");
  const Json& list = field(doc, "edges");
  if (!list.is_array()) throw MalformedInput("edges must be an array");
  std::vector<Edge> edges;
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 2) throw MalformedInput("each edge must be a pair [j,i]");
    edges.push_back({as_int(e[0], "vertex"), as_int(e[1], "vertex")});
  }
  return CompartmentGraph(n, std::move(edges));
}

CompartmentGraph parse_graph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

Json graph_to_json(const CompartmentGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

std::vector<int> parse_edge_list(std::string_view text, const CompartmentGraph& g) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid edge list: ") + e.what());
  }
  if (!doc.is_array()) throw MalformedInput("edge list must be an array of [j,i] pairs");
  std::vector<int> out;
  for (const Json& e : doc) {
    if (!e.is_array() || e.size() != 2) throw MalformedInput("each edge must be a pair [j,i]");
    const Vertex s = as_int(e[0], "vertex");
    const Vertex t = as_int(e[1], "vertex");
    const bool in_range = s >= 1 && t >= 1 && s <= g.vertex_count() && t <= g.vertex_count();
    const auto index = in_range ? g.edge_index(s, t) : std::nullopt;
    if (!index) throw InvalidEdge("edge [" + std::to_string(s) + "," + std::to_string(t) + "] is not in the graph");
    out.push_back(*index);
  }
  return out;
}

std::vector<int> parse_monomial(std::string_view text, const std::vector<std::string>& names) {
  std::vector<int> exps(names.size(), 0);
  if (text == "1") return exps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('*', pos), text.size());
    std::string_view factor = text.substr(pos, end - pos);
    int power = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      const std::string_view digits = factor.substr(caret + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw MalformedInput("bad exponent in monomial \"" + std::string(text) + "\"");
      }
      factor = factor.substr(0, caret);
    }
    const auto it = std::find(names.begin(), names.end(), factor);
    if (it == names.end()) throw MalformedInput("unknown factor \"" + std::string(factor) + "\"");
    exps[static_cast<std::size_t>(it - names.begin())] += power;
    pos = end + 1;
  }
  return exps;
}

Json dimension_report_json(const DimensionReport& report) {
  return Json{{"n", report.n},         {"m", report.m},           {"d", report.d},
              {"expected", report.expected}, {"verdict", report.verdict}, {"trials", report.trials},
              {"seed", report.seed},   {"mode", to_string(report.mode)}};
}

Json reparametrization_json(const CompartmentGraph& g, const ScalingReparametrization& r) {
  Json tree = Json::array();
  for (int e : r.tree.edges) tree.push_back(edge_json(g.edge(e)));
  Json f = Json::array();
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    f.push_back({{"vertex", v}, {"monomial", edge_monomial(g, r.f_exponents[static_cast<std::size_t>(v - 1)])}});
  }
  Json cycles = Json::array();
  for (const Cycle& c : r.basis.cycles) cycles.push_back(edge_monomial(g, c.exponent_vector(g)));
  const auto q = cycle_names(r.basis.cycles.size());
  Json expressions = Json::array();
  for (const CycleExpression& x : r.expressions) {
    expressions.push_back({{"edge", edge_json(g.edge(x.edge))},
                           {"in_cycles", format_monomial(x.z, [&](std::size_t i) { return q[i]; })}});
  }
  return Json{{"graph", graph_to_json(g)},
              {"tree_edges", tree},
              {"f", f},
              {"matrix", reparametrized_matrix(g, r)},
              {"cycle_basis", cycles},
              {"expressions", expressions}};
}

ParsedReparametrization reparametrization_from_json(const Json& doc) {
  try {
    CompartmentGraph g = graph_from_json(field(doc, "graph"));
    const int n = g.vertex_count();
    const auto names = edge_names(g);

    std::vector<int> tree_edges;
    for (const Json& e : field(doc, "tree_edges")) {
      const auto index = g.edge_index(as_int(e.at(0), "vertex"), as_int(e.at(1), "vertex"));
      if (!index) throw MalformedInput("tree edge not in the graph");
      tree_edges.push_back(*index);
    }
    ScalingReparametrization r;
    r.tree = spanning_tree_from_edges(g, tree_edges);

    const Json& f = field(doc, "f");
    if (!f.is_array() || static_cast<int>(f.size()) != n) throw MalformedInput("f needs one entry per vertex");
    r.f_exponents.assign(static_cast<std::size_t>(n), {});
    for (const Json& item : f) {
      const int v = as_int(field(item, "vertex"), "vertex");
      if (v < 1 || v > n) throw MalformedInput("f vertex out of range");
      r.f_exponents[static_cast<std::size_t>(v - 1)] = parse_monomial(as_string(field(item, "monomial"), "monomial"), names);
    }

    const Json& matrix = field(doc, "matrix");
    if (!matrix.is_array() || static_cast<int>(matrix.size()) != n) throw MalformedInput("matrix must be n x n");
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [s, t] = g.edge(e);
      const Json& row = matrix.at(static_cast<std::size_t>(t - 1));
      r.rescaled_exponents.push_back(parse_monomial(as_string(row.at(static_cast<std::size_t>(s - 1)), "entry"), names));
    }

    CycleSet cycles;
    for (const Json& c : field(doc, "cycle_basis")) cycles.push_back(cycle_from_edges(g, parse_monomial(as_string(c, "cycle"), names)));
    r.basis = make_cycle_basis(g, r.tree, std::move(cycles));

    const auto q = cycle_names(r.basis.cycles.size());
    for (const Json& x : field(doc, "expressions")) {
      const Json& e = field(x, "edge");
      const auto index = g.edge_index(as_int(e.at(0), "vertex"), as_int(e.at(1), "vertex"));
      if (!index) throw MalformedInput("expression edge not in the graph");
      r.expressions.push_back({*index, parse_monomial(as_string(field(x, "in_cycles"), "in_cycles"), q)});
    }
    return {std::move(g), std::move(r)};
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string("malformed reparametrization: ") + e.what());
  }
}

Json census_row_json(const CensusRow& row, bool detail) {
  auto opt = [](const std::optional<std::uint64_t>& x) { return x ? Json(*x) : Json(nullptr); };
  Json out{{"n", row.n}, {"m", row.m}, {"A", row.a}, {"B", row.b}, {"C", row.c},
           {"D", opt(row.d)}, {"E", row.e}, {"F", opt(row.f)}};
  if (detail) {
    Json classes = Json::array();
    for (const CensusClass& k : row.classes) {
      classes.push_back({{"representative", graph_to_json(k.representative)},
                         {"size", k.members.size()},
                         {"expected", k.expected},
                         {"exchange", k.exchange},
                         {"isc", k.isc}});
    }
    out["classes"] = classes;
  }
  return out;
}

Json conjecture_reports_json(const std::vector<ConjectureReport>& reports) {
  Json out = Json::array();
  for (const ConjectureReport& r : reports) {
    Json counter = Json::array();
    for (const Counterexample& c : r.counterexamples) {
      counter.push_back({{"graph", graph_to_json(c.graph)},
                         {"exchange", c.exchange},
                         {"collapsed", graph_to_json(c.collapsed)},
                         {"graph_expected", c.graph_expected},
                         {"collapsed_expected", c.collapsed_expected}});
    }
    out.push_back({{"id", r.id}, {"tested", r.tested}, {"counterexamples", counter}});
  }
  return out;
}

}  // namespace compid
