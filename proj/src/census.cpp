#include "compid/census.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "compid/canonical.hpp"
#include "compid/errors.hpp"
#include "compid/reparam.hpp"

namespace compid {

DimensionOptions graph_dimension_options(const CompartmentGraph& g, const CensusOptions& options) {
  DimensionOptions d;
  d.trials = options.trials;
  d.mode = options.mode;
  d.seed = mix_seed(options.seed, stable_hash(canonical_form(g)));
  return d;
}

std::vector<Edge> candidate_edges(int n) {
  std::vector<Edge> out;
  for (Vertex s = 1; s <= n; ++s)
    for (Vertex t = 1; t <= n; ++t)
      if (s != t) out.push_back({s, t});
  return out;
}

namespace {

void check_range(int n, int m, const CensusOptions& options) {
  if (n < 1) throw MalformedInput("census needs at least one vertex");
  if (n > options.max_vertices) {
    throw LimitExceeded("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(options.max_vertices));
  }
  if (m < 0 || m > n * (n - 1)) throw MalformedInput("edge count " + std::to_string(m) + " out of range");
}

// m-subsets of {0..N-1} in lexicographic order, as bitmasks.
std::vector<std::uint64_t> subset_masks(int total, int m) {
  std::vector<std::uint64_t> out;
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int i : pick) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    int i = m - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - m + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

bool mask_strongly_connected(int n, std::uint64_t mask, const std::vector<Edge>& candidates) {
  std::uint32_t out[CompartmentGraph::kMaxVertices] = {};
  std::uint32_t in[CompartmentGraph::kMaxVertices] = {};
  for (std::uint64_t b = mask; b != 0; b &= b - 1) {
    const Edge& e = candidates[static_cast<std::size_t>(std::countr_zero(b))];
    out[e.source - 1] |= std::uint32_t{1} << (e.target - 1);
    in[e.target - 1] |= std::uint32_t{1} << (e.source - 1);
  }
  const std::uint32_t all = all_vertices_mask(n);
  for (const std::uint32_t* adj : {out, in}) {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != all) return false;
  }
  return true;
}

CompartmentGraph graph_from_mask(int n, std::uint64_t mask, const std::vector<Edge>& candidates) {
  std::vector<Edge> edges;
  for (std::uint64_t b = mask; b != 0; b &= b - 1) edges.push_back(candidates[static_cast<std::size_t>(std::countr_zero(b))]);
  return CompartmentGraph(n, std::move(edges));
}

bool is_maximal(int n, int m) { return m == 2 * n - 2; }

void tally(CensusRow& row) {
  row.a = 0;
  row.b = 0;
  row.c = row.classes.size();
  row.e = 0;
  std::uint64_t d = 0, f = 0;
  for (const CensusClass& k : row.classes) {
    row.a += k.members.size();
    if (k.expected) {
      row.b += k.members.size();
      ++row.e;
    }
    if (k.exchange) ++d;
    if (k.isc) ++f;
  }
  if (is_maximal(row.n, row.m)) {
    row.d = d;
    row.f = f;
  } else {
    row.d.reset();
    row.f.reset();
  }
}

// Collects the first error raised inside a parallel region.
class ErrorSlot {
 public:
  void capture(const std::exception& e) {
    std::lock_guard lock(mu_);
    if (message_.empty()) message_ = e.what();
    failed_ = true;
  }
  void rethrow() const {
    if (failed_) throw Error(message_);
  }

 private:
  std::mutex mu_;
  std::string message_;
  std::atomic<bool> failed_{false};
};

}  // namespace

std::vector<CompartmentGraph> enumerate_sc_graphs(int n, int m, const CensusOptions& options) {
  check_range(n, m, options);
  const auto candidates = candidate_edges(n);
  std::vector<CompartmentGraph> out;
  for (std::uint64_t mask : subset_masks(static_cast<int>(candidates.size()), m)) {
    if (mask_strongly_connected(n, mask, candidates)) out.push_back(graph_from_mask(n, mask, candidates));
  }
  return out;
}

CensusRow census_row(int n, int m, const CensusOptions& options) {
  check_range(n, m, options);
  const auto candidates = candidate_edges(n);
  const auto masks = subset_masks(static_cast<int>(candidates.size()), m);
  const auto count = static_cast<std::int64_t>(masks.size());

  std::vector<char> strongly(masks.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    strongly[static_cast<std::size_t>(i)] = mask_strongly_connected(n, masks[static_cast<std::size_t>(i)], candidates);
  }

  std::vector<CompartmentGraph> graphs;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (strongly[i]) graphs.push_back(graph_from_mask(n, masks[i], candidates));
  }
  const auto graph_count = static_cast<std::int64_t>(graphs.size());

  std::vector<std::string> canon(graphs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < graph_count; ++i) {
    canon[static_cast<std::size_t>(i)] = canonical_form(graphs[static_cast<std::size_t>(i)]);
  }

  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < graphs.size(); ++i) groups[canon[i]].push_back(i);

  CensusRow row;
  row.n = n;
  row.m = m;
  row.classes.reserve(groups.size());
  std::vector<std::size_t> class_of(graphs.size());
  for (auto& [key, idx] : groups) {
    CensusClass k{key, graphs[idx.front()], {}, false, false, false};
    for (std::size_t i : idx) {
      class_of[i] = row.classes.size();
      k.members.push_back(graphs[i]);
    }
    row.classes.push_back(std::move(k));
  }

  ErrorSlot errors;
  const auto class_count = static_cast<std::int64_t>(row.classes.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t ci = 0; ci < class_count; ++ci) {
    CensusClass& k = row.classes[static_cast<std::size_t>(ci)];
    try {
      k.exchange = has_exchange(k.representative).has_value();
      k.isc = is_inductively_strongly_connected(k.representative).has_value();
      k.expected = has_expected_dimension(k.representative, graph_dimension_options(k.representative, options));
    } catch (const std::exception& e) {
      errors.capture(e);
    }
  }
  errors.rethrow();

  // Relabelling equivariance spot-check on every hundredth graph.
  std::atomic<bool> mismatch{false};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 99; i < graph_count; i += 100) {
    const auto& g = graphs[static_cast<std::size_t>(i)];
    const auto& k = row.classes[class_of[static_cast<std::size_t>(i)]];
    try {
      if (has_expected_dimension(g, graph_dimension_options(g, options)) != k.expected) mismatch = true;
    } catch (const std::exception& e) {
      errors.capture(e);
    }
  }
  errors.rethrow();
  if (mismatch) throw Error("expected-dimension verdict differs inside a symmetry class");

  tally(row);
  return row;
}

CensusRow census_row_reference(int n, int m, const CensusOptions& options) {
  check_range(n, m, options);
  const auto candidates = candidate_edges(n);
  struct Entry {
    CompartmentGraph g;
    bool expected;
  };
  std::map<std::string, std::vector<Entry>> groups;
  for (std::uint64_t mask : subset_masks(static_cast<int>(candidates.size()), m)) {
    if (!mask_strongly_connected(n, mask, candidates)) continue;
    CompartmentGraph g = graph_from_mask(n, mask, candidates);
    const bool expected = has_expected_dimension(g, graph_dimension_options(g, options));
    groups[canonical_form(g)].push_back({std::move(g), expected});
  }

  CensusRow row;
  row.n = n;
  row.m = m;
  std::uint64_t b = 0;
  for (auto& [key, entries] : groups) {
    CensusClass k{key, entries.front().g, {}, entries.front().expected, false, false};
    k.exchange = has_exchange(k.representative).has_value();
    k.isc = is_inductively_strongly_connected(k.representative).has_value();
    for (auto& entry : entries) {
      if (entry.expected) ++b;
      k.members.push_back(std::move(entry.g));
    }
    row.classes.push_back(std::move(k));
  }
  tally(row);
  row.b = b;  // per-graph verdicts, not inherited from the representative
  return row;
}

std::string census_csv_header() { return "n,m,A,B,C,D,E,F"; }

std::string census_csv_line(const CensusRow& row) {
  auto opt = [](const std::optional<std::uint64_t>& x) { return x ? std::to_string(*x) : std::string(); };
  return std::to_string(row.n) + "," + std::to_string(row.m) + "," + std::to_string(row.a) + "," +
         std::to_string(row.b) + "," + std::to_string(row.c) + "," + opt(row.d) + "," + std::to_string(row.e) + "," +
         opt(row.f);
}

std::vector<CompartmentGraph> non_isc_identifiable_classes(int n, int m, const CensusOptions& options) {
  std::vector<CompartmentGraph> out;
  if (!is_maximal(n, m)) return out;
  const CensusRow row = census_row(n, m, options);
  for (const CensusClass& k : row.classes) {
    if (k.expected && !k.isc) out.push_back(k.representative);
  }
  return out;
}

std::vector<ConjectureReport> test_conjectures(int n, const CensusOptions& options) {
  ConjectureReport maximal{"collapse-2n-4", 0, {}};
  ConjectureReport to_cycle{"collapse-n-1", 0, {}};
  std::map<std::string, bool> verdicts;
  auto expected = [&](const CompartmentGraph& g) {
    const std::string key = canonical_form(g);
    auto it = verdicts.find(key);
    if (it == verdicts.end()) it = verdicts.emplace(key, has_expected_dimension(g, graph_dimension_options(g, options))).first;
    return it->second;
  };

  for (int m = n; m <= 2 * n - 2; ++m) {
    for (const CompartmentGraph& g : enumerate_sc_graphs(n, m, options)) {
      for (Vertex v : exchange_vertices(g)) {
        const CompartmentGraph collapsed = collapse_exchange_at(g, v);
        const int mc = collapsed.edge_count();
        const bool hyp_maximal = m == 2 * n - 2 && mc == 2 * n - 4 && has_exchange(collapsed).has_value();
        const bool hyp_cycle = mc == n - 1;
        if (!hyp_maximal && !hyp_cycle) continue;
        const bool eg = expected(g);
        const bool ec = expected(collapsed);
        for (auto [applies, report] : {std::pair{hyp_maximal, &maximal}, std::pair{hyp_cycle, &to_cycle}}) {
          if (!applies) continue;
          ++report->tested;
          if (eg != ec) report->counterexamples.push_back({g, v, collapsed, eg, ec});
        }
      }
    }
  }
  return {maximal, to_cycle};
}

std::vector<PropertyResult> property_suite(int n_max, const CensusOptions& options) {
  PropertyResult exchange{"exchange-necessity", true, 0, ""};
  PropertyResult isc{"minimal-isc-expected", true, 0, ""};
  PropertyResult isc_edges{"isc-edge-bound", true, 0, ""};
  PropertyResult cycle{"directed-cycle-expected", true, 0, ""};
  PropertyResult add{"add-exchange-preserves", true, 0, ""};
  PropertyResult bound{"edge-bound", true, 0, ""};
  PropertyResult orbits{"orbit-consistency", true, 0, ""};
  PropertyResult dim_cap{"dimension-cap", true, 0, ""};

  auto violate = [](PropertyResult& p, const std::string& what) {
    if (p.passed) p.detail = what;
    p.passed = false;
  };

  for (int n = 1; n <= n_max; ++n) {
    for (int m = (n == 1 ? 0 : n); m <= 2 * n - 2; ++m) {
      const CensusRow row = census_row(n, m, options);
      std::uint64_t orbit_total = 0;
      for (const CensusClass& k : row.classes) {
        orbit_total += orbit_size(k.representative);
        const auto report = image_dimension(k.representative, graph_dimension_options(k.representative, options));
        ++dim_cap.checked;
        if (report.d > m + 1 || report.d > 2 * n - 1) violate(dim_cap, "dimension above min(m+1, 2n-1)");
        for (const CompartmentGraph& g : k.members) {
          const auto cert = is_inductively_strongly_connected(g);
          ++isc_edges.checked;
          if (cert && (!is_valid_isc_certificate(g, *cert) || m < 2 * n - 2)) {
            violate(isc_edges, "ISC certificate invalid or fewer than 2n-2 edges");
          }
        }
        if (is_maximal(n, m)) {
          if (n >= 2 && k.expected) {
            exchange.checked += k.members.size();
            if (!k.exchange) violate(exchange, "maximal graph with expected dimension lacks an exchange");
          }
          if (k.isc) {
            isc.checked += k.members.size();
            if (!k.expected) violate(isc, "minimal ISC graph without the expected dimension");
          }
        }
        if (n + 1 <= std::min(n_max, 5) && n <= 4 && k.expected) {
          for (const CompartmentGraph& g : k.members) {
            ++add.checked;
            const CompartmentGraph bigger = add_exchange_vertex(g);
            if (!has_expected_dimension(bigger, graph_dimension_options(bigger, options))) {
              violate(add, "adding an exchange vertex lost the expected dimension");
            }
          }
        }
      }
      ++orbits.checked;
      if (orbit_total != row.a) violate(orbits, "orbit sizes do not sum to A");
    }
    // Above the maximal edge count the rank is capped at 2n-1 < m+1.
    if (n <= std::min(n_max, 4)) {
      for (int m = 2 * n - 1; m <= n * (n - 1); ++m) {
        for (const CompartmentGraph& g : enumerate_sc_graphs(n, m, options)) {
          ++bound.checked;
          const auto opts = graph_dimension_options(g, options);
          if (has_expected_dimension(g, opts)) violate(bound, "graph above 2n-2 edges reported expected");
          if (image_dimension(g, opts).d > 2 * n - 1) violate(bound, "rank above 2n-1");
        }
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    const CompartmentGraph g = directed_cycle(n);
    ++cycle.checked;
    if (!has_expected_dimension(g, graph_dimension_options(g, options))) {
      violate(cycle, "directed " + std::to_string(n) + "-cycle lacks the expected dimension");
    }
  }
  return {exchange, isc, isc_edges, cycle, add, bound, orbits, dim_cap};
}

ReparamSweep sweep_reparametrizations(const CensusRow& row, int trees_per_graph, const CensusOptions& options) {
  std::vector<const CompartmentGraph*> targets;
  for (const CensusClass& k : row.classes) {
    if (!k.expected) continue;
    for (const CompartmentGraph& g : k.members) targets.push_back(&g);
  }
  ReparamSweep sweep;
  sweep.graphs = targets.size();
  std::atomic<std::uint64_t> verified{0}, single{0};
  std::mutex mu;
  const auto count = static_cast<std::int64_t>(targets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const CompartmentGraph& g = *targets[static_cast<std::size_t>(i)];
    try {
      std::vector<SpanningTree> trees{spanning_tree(g)};
      std::set<std::vector<int>> seen;
      auto key = [](const SpanningTree& t) {
        auto e = t.edges;
        std::sort(e.begin(), e.end());
        return e;
      };
      seen.insert(key(trees.front()));
      for (const SpanningTree& t : enumerate_spanning_trees(g, static_cast<std::size_t>(trees_per_graph) + 1)) {
        if (static_cast<int>(trees.size()) >= trees_per_graph) break;
        if (seen.insert(key(t)).second) trees.push_back(t);
      }
      if (trees.size() < 2) ++single;
      for (const SpanningTree& t : trees) {
        const ScalingReparametrization r = build_reparametrization(g, t);
        const VerificationReport check = verify_reparametrization(g, r, options.seed);
        if (check.ok) {
          ++verified;
        } else {
          std::lock_guard lock(mu);
          sweep.failures.push_back(check.failures.front());
        }
      }
    } catch (const std::exception& e) {
      std::lock_guard lock(mu);
      sweep.failures.push_back(e.what());
    }
  }
  sweep.verified = verified;
  sweep.single_tree = single;
  return sweep;
}

}  // namespace compid
