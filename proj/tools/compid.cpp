// Command-line front end. Exit codes: 0 success, 1 no reparametrization,
// 2 invalid input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "compid/census.hpp"
#include "compid/charpoly.hpp"
#include "compid/errors.hpp"
#include "compid/io.hpp"
#include "compid/reparam.hpp"

namespace {

using namespace compid;

struct Flags {
  std::uint64_t seed = 0;
  int trials = 2;
  bool exact = false;
  std::string tree;
  bool json = false;
  bool detail = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DimensionOptions dimension_options(const Flags& flags) {
  DimensionOptions d;
  d.seed = flags.seed;
  d.trials = flags.trials;
  d.mode = flags.exact ? ArithmeticMode::Rational : ArithmeticMode::PrimeField;
  return d;
}

CensusOptions census_options(const Flags& flags) {
  CensusOptions c;
  c.seed = flags.seed;
  c.trials = flags.trials;
  c.mode = flags.exact ? ArithmeticMode::Rational : ArithmeticMode::PrimeField;
  return c;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(std::ostream& out, const DimensionReport& r) {
  out << "n = " << r.n << ", m = " << r.m << "\n";
  out << "dimension " << r.d << " (expected " << r.expected << ", " << r.trials << " trials, seed " << r.seed << ", "
      << to_string(r.mode) << ")\n";
  out << "expected dimension: " << yes_no(r.verdict) << "\n";
}

int run_analyze(const std::string& path, const Flags& flags, std::ostream& out) {
  const CompartmentGraph g = parse_graph(read_input(path));
  const bool sc = is_strongly_connected(g);
  const CompartmentGraph core = sc ? g : io_strong_component(g);
  const DimensionReport report = image_dimension(core, dimension_options(flags));
  const bool isc = is_inductively_strongly_connected(core).has_value();
  const auto exchange = has_exchange(core);
  if (flags.json) {
    Json doc{{"graph", graph_to_json(g)}, {"strongly_connected", sc}};
    if (!sc) doc["io_component"] = graph_to_json(core);
    doc["isc"] = isc;
    doc["exchange"] = exchange ? Json(*exchange) : Json(nullptr);
    doc["dimension"] = dimension_report_json(report);
    out << doc.dump(2) << "\n";
  } else {
    out << "strongly connected: " << yes_no(sc) << "\n";
    if (!sc) out << "analysing the input/output component " << graph_to_json(core).dump() << "\n";
    out << "inductively strongly connected: " << yes_no(isc) << "\n";
    out << "exchange: " << (exchange ? "1 <-> " + std::to_string(*exchange) : std::string("none")) << "\n";
    print_report(out, report);
  }
  return 0;
}

int run_reparam(const std::string& path, const Flags& flags, std::ostream& out) {
  const CompartmentGraph g = parse_graph(read_input(path));
  ReparamOptions options;
  options.dimension = dimension_options(flags);
  if (!flags.tree.empty()) options.tree_edges = parse_edge_list(flags.tree, g);

  ReparamResult result;
  std::string reason;
  try {
    result = reparametrize(g, options);
  } catch (const TooManyEdges& e) {
    result.dimension = image_dimension(g, options.dimension);
    reason = e.what();
  }
  if (!result.reparametrization) {
    if (reason.empty()) reason = "image dimension is below m + 1";
    if (flags.json) {
      out << Json{{"reparametrization", nullptr}, {"reason", reason}, {"dimension", dimension_report_json(result.dimension)}}
                 .dump(2)
          << "\n";
    } else {
      out << "no identifiable scaling reparametrization exists (" << reason << ")\n";
      print_report(out, result.dimension);
    }
    return 1;
  }
  const ScalingReparametrization& r = *result.reparametrization;
  if (flags.json) {
    Json doc = reparametrization_json(g, r);
    doc["dimension"] = dimension_report_json(result.dimension);
    out << doc.dump(2) << "\n";
    return 0;
  }
  print_report(out, result.dimension);
  out << "spanning tree:";
  for (int e : r.tree.edges) out << " " << g.parameter_name(g.edge_parameter(e));
  out << "\nscaling:\n";
  for (Vertex v = 2; v <= g.vertex_count(); ++v) {
    out << "  f" << v << " = " << edge_monomial(g, r.f_exponents[static_cast<std::size_t>(v - 1)]) << "\n";
  }
  out << "cycle basis:\n";
  for (std::size_t i = 0; i < r.basis.cycles.size(); ++i) {
    out << "  q" << i + 1 << " = " << edge_monomial(g, r.basis.cycles[i].exponent_vector(g)) << "\n";
  }
  out << "reparametrized matrix:\n";
  for (const auto& row : reparametrized_matrix(g, r)) {
    out << " ";
    for (const auto& entry : row) out << " " << entry;
    out << "\n";
  }
  return 0;
}

int run_io_equation(const std::string& path, const Flags& flags, std::ostream& out) {
  const CompartmentGraph g = parse_graph(read_input(path));
  const std::string text = io_equation_text(g);
  if (flags.json) {
    out << Json{{"equation", text}}.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

int run_census(int n, int m, const Flags& flags, std::ostream& out) {
  const CensusRow row = census_row(n, m, census_options(flags));
  if (flags.json || flags.detail) {
    out << census_row_json(row, flags.detail).dump(2) << "\n";
  } else {
    out << census_csv_header() << "\n" << census_csv_line(row) << "\n";
  }
  return 0;
}

int run_conjectures(int n, const Flags& flags, std::ostream& out) {
  const auto reports = test_conjectures(n, census_options(flags));
  if (flags.json) {
    out << conjecture_reports_json(reports).dump(2) << "\n";
    return 0;
  }
  for (const ConjectureReport& r : reports) {
    out << r.id << ": " << r.tested << " collapses tested, " << r.counterexamples.size() << " counterexamples\n";
    for (const Counterexample& c : r.counterexamples) {
      out << "  " << graph_to_json(c.graph).dump() << " at exchange " << c.exchange << " -> "
          << graph_to_json(c.collapsed).dump() << " (" << yes_no(c.graph_expected) << " vs "
          << yes_no(c.collapsed_expected) << ")\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identifiable scaling reparametrizations of linear compartment models"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--seed", flags.seed, "random seed for the Jacobian rank test")->capture_default_str();
  app.add_option("--trials", flags.trials, "random points per rank test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--exact", flags.exact, "use rational arithmetic instead of a prime field");
  app.add_option("--tree", flags.tree, "spanning tree as an edge list, e.g. [[1,2],[2,3]]");
  app.add_flag("--json", flags.json, "machine-readable output");
  app.add_flag("--detail", flags.detail, "per-class detail for census");

  std::string path;
  int n = 0, m = 0;
  auto* analyze = app.add_subcommand("analyze", "image dimension and structural predicates");
  analyze->add_option("graph", path, "graph JSON file, - for stdin")->required();
  auto* reparam = app.add_subcommand("reparam", "identifiable scaling reparametrization");
  reparam->add_option("graph", path, "graph JSON file, - for stdin")->required();
  auto* io = app.add_subcommand("io-equation", "input-output equation");
  io->add_option("graph", path, "graph JSON file, - for stdin")->required();
  auto* census = app.add_subcommand("census", "census row for n vertices and m edges");
  census->add_option("n", n)->required();
  census->add_option("m", m)->required();
  auto* conjectures = app.add_subcommand("conjectures", "test the collapse conjectures for n vertices");
  conjectures->add_option("n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream out;
  int code = 0;
  try {
    if (*analyze) {
      code = run_analyze(path, flags, out);
    } else if (*reparam) {
      code = run_reparam(path, flags, out);
    } else if (*io) {
      code = run_io_equation(path, flags, out);
    } else if (*census) {
      code = run_census(n, m, flags, out);
    } else {
      code = run_conjectures(n, flags, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << out.str();
  return code;
}
