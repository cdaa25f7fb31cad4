#include <gtest/gtest.h>

#include "compid/census.hpp"
#include "compid/errors.hpp"
#include "compid/graph.hpp"

using namespace compid;

namespace {

std::vector<std::uint64_t> counts(const CensusRow& r) {
  return {r.a, r.b, r.c, r.d.value_or(0), r.e, r.f.value_or(0)};
}

// Strongly connected m-subsets by brute force over all bitmasks.
std::size_t sc_count_oracle(int n, int m) {
  const auto cand = candidate_edges(n);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1) edges.push_back(cand[i]);
    if (is_strongly_connected(CompartmentGraph(n, edges))) ++count;
  }
  return count;
}

}  // namespace

TEST(Census, EnumerationMatchesBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= n * (n - 1); ++m) ASSERT_EQ(enumerate_sc_graphs(n, m).size(), sc_count_oracle(n, m));
  }
}

TEST(Census, SmallRowsMatchTable) {
  EXPECT_EQ(counts(census_row(3, 3)), (std::vector<std::uint64_t>{2, 2, 1, 0, 1, 0}));
  EXPECT_EQ(counts(census_row(3, 4)), (std::vector<std::uint64_t>{9, 7, 5, 4, 4, 4}));
  EXPECT_EQ(counts(census_row(4, 4)), (std::vector<std::uint64_t>{6, 6, 1, 0, 1, 0}));
  EXPECT_EQ(counts(census_row(4, 6)), (std::vector<std::uint64_t>{316, 166, 55, 34, 30, 26}));
  EXPECT_FALSE(census_row(4, 4).d);
  EXPECT_TRUE(census_row(4, 6).f);
}

TEST(Census, ParallelAgreesWithSerialReference) {
  for (auto [n, m] : {std::pair{3, 3}, {3, 4}, {4, 4}, {4, 5}, {4, 6}}) {
    const CensusRow fast = census_row(n, m);
    const CensusRow ref = census_row_reference(n, m);
    ASSERT_EQ(counts(fast), counts(ref)) << n << "," << m;
    ASSERT_EQ(fast.classes.size(), ref.classes.size());
    for (std::size_t i = 0; i < fast.classes.size(); ++i) {
      ASSERT_EQ(fast.classes[i].canonical, ref.classes[i].canonical);
      ASSERT_EQ(fast.classes[i].members, ref.classes[i].members);
    }
  }
}

TEST(Census, VerdictConstantOnClasses) {
  CensusOptions options;
  options.seed = 3;
  for (const CensusClass& k : census_row(4, 6, options).classes) {
    for (const CompartmentGraph& g : k.members) {
      ASSERT_EQ(has_expected_dimension(g, graph_dimension_options(g, options)), k.expected);
    }
  }
}

TEST(Census, DeterministicAcrossRuns) {
  EXPECT_EQ(census_csv_line(census_row(4, 5)), census_csv_line(census_row(4, 5)));
}

TEST(Census, Csv) {
  EXPECT_EQ(census_csv_header(), "n,m,A,B,C,D,E,F");
  EXPECT_EQ(census_csv_line(census_row(3, 3)), "3,3,2,2,1,,1,");
  EXPECT_EQ(census_csv_line(census_row(3, 4)), "3,4,9,7,5,4,4,4");
}

TEST(Census, Guardrails) {
  EXPECT_THROW(census_row(6, 6), LimitExceeded);
  EXPECT_THROW(census_row(3, 7), MalformedInput);
  CensusOptions wide;
  wide.max_vertices = 6;
  EXPECT_EQ(enumerate_sc_graphs(6, 6, wide).size(), 120u);  // 5! directed 6-cycles
}

TEST(Census, NonIscIdentifiableClasses) {
  for (const CompartmentGraph& g : non_isc_identifiable_classes(4, 6)) {
    EXPECT_TRUE(has_expected_dimension(g, graph_dimension_options(g, {})));
    EXPECT_FALSE(is_inductively_strongly_connected(g));
  }
  // 30 expected classes, 26 of them ISC.
  EXPECT_EQ(non_isc_identifiable_classes(4, 6).size(), 4u);
  EXPECT_TRUE(non_isc_identifiable_classes(4, 5).empty());
}

TEST(Conjectures, HarnessReportsWithoutThrowing) {
  for (int n = 3; n <= 4; ++n) {
    const auto reports = test_conjectures(n);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_EQ(reports[0].id, "collapse-2n-4");
    EXPECT_EQ(reports[1].id, "collapse-n-1");
    EXPECT_GT(reports[0].tested + reports[1].tested, 0u);
    for (const auto& r : reports) {
      for (const Counterexample& c : r.counterexamples) {
        EXPECT_NE(c.graph_expected, c.collapsed_expected);
        EXPECT_EQ(collapse_exchange_at(c.graph, c.exchange), c.collapsed);
      }
    }
  }
}

TEST(Properties, ProvenStatementsHoldUpToFourVertices) {
  for (const PropertyResult& p : property_suite(4)) {
    EXPECT_TRUE(p.passed) << p.name << ": " << p.detail;
    EXPECT_GT(p.checked, 0u) << p.name;
  }
}

TEST(Sweep, ReparametrizationsVerifyOnTwoTrees) {
  const CensusRow row = census_row(4, 6);
  const ReparamSweep sweep = sweep_reparametrizations(row, 2);
  EXPECT_EQ(sweep.graphs, row.b);
  EXPECT_TRUE(sweep.failures.empty()) << sweep.failures.front();
  EXPECT_EQ(sweep.verified, 2 * sweep.graphs - sweep.single_tree);
}
