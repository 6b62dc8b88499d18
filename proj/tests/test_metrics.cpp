#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cascode/graph.hpp"
#include "cascode/metrics.hpp"
#include "cascode/partition.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cascode;
using cascode::testing::all_partitions;
using cascode::testing::graph_from_mask;
using cascode::testing::modularity_double_sum;
using cascode::testing::pair_count;

using cascode::testing::same_up_to_relabel;

namespace {

Partition labels(std::vector<std::uint32_t> v) {
  return Partition::from_labels(std::move(v));
}

}  // namespace

TEST_CASE("single community scores zero") {
  const Graph g = parse_edge_list("a b\nb c\nc a\nc d");
  CHECK(modularity(g, labels({0, 0, 0, 0})) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("two disjoint triangles split at half") {
  const Graph g = parse_edge_list("a b\nb c\nc a\nd e\ne f\nf d");
  CHECK(modularity(g, labels({0, 0, 0, 1, 1, 1})) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("triangle into singletons") {
  const Graph g = parse_edge_list("a b\nb c\nc a");
  CHECK(modularity(g, labels({0, 1, 2})) ==
        doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("modularity rejects edgeless graphs and size mismatches") {
  const Graph edgeless = parse_edge_list("a a\nb b");
  CHECK_THROWS_WITH_AS(modularity(edgeless, labels({0, 1})),
                       "modularity undefined for edgeless graph",
                       std::invalid_argument);
  const Graph g = parse_edge_list("a b");
  CHECK_THROWS_AS(modularity(g, labels({0, 0, 1})), std::invalid_argument);
}

TEST_CASE("modularity is invariant under label renaming") {
  const Graph g = parse_edge_list("a b\nb c\nc a\nd e\ne f\nf d\nc d");
  const double q1 = modularity(g, labels({0, 0, 0, 1, 1, 1}));
  const double q2 = modularity(g, labels({1, 1, 1, 0, 0, 0}));
  CHECK(q1 == q2);
}

TEST_CASE("modularity matches the double-sum definition exhaustively") {
  // every graph on up to 5 nodes, every partition (the 6-node sweep lives in
  // the acceptance suite)
  for (std::uint32_t n = 2; n <= 5; ++n) {
    const auto parts = all_partitions(n);
    for (std::uint64_t mask = 1; mask < (1ull << pair_count(n)); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      for (const auto& raw : parts) {
        const Partition p = labels(raw);
        CHECK(std::abs(modularity(g, p) - modularity_double_sum(g, p)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("nmi of identical partitions is exactly one") {
  const Partition p = labels({0, 1, 0, 2, 1});
  CHECK(nmi(p, p) == 1.0);
  CHECK(nmi(labels({0, 0, 0}), labels({0, 0, 0})) == 1.0);  // trivial blocks
}

TEST_CASE("nmi is relabel invariant") {
  CHECK(nmi(labels({0, 0, 1, 1}), labels({1, 1, 0, 0})) == 1.0);
  CHECK(nmi(labels({0, 1, 2, 0}), labels({2, 0, 1, 2})) == 1.0);
}

TEST_CASE("independent partitions score zero") {
  // checkerboard: every confusion cell holds exactly one node
  CHECK(nmi(labels({0, 0, 1, 1}), labels({0, 1, 0, 1})) == 0.0);
}

TEST_CASE("single block against a finer partition scores zero") {
  CHECK(nmi(labels({0, 0, 0, 0}), labels({0, 1, 2, 3})) == 0.0);
  CHECK(nmi(labels({0, 1, 0, 1}), labels({0, 0, 0, 0})) == 0.0);
}

TEST_CASE("nmi rejects mismatched node sets") {
  CHECK_THROWS_AS(nmi(labels({0, 1}), labels({0, 1, 1})), std::invalid_argument);
}

TEST_CASE("nmi properties on exhaustive small partitions") {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    const auto parts = all_partitions(n);
    for (const auto& ra : parts) {
      const Partition a = labels(ra);
      for (const auto& rb : parts) {
        const Partition b = labels(rb);
        const double ab = nmi(a, b);
        CHECK(ab == nmi(b, a));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK((ab == 1.0) == same_up_to_relabel(a, b));
      }
    }
  }
}

TEST_CASE("confusion table marginals are consistent") {
  const Partition a = labels({0, 0, 1, 1, 2});
  const Partition b = labels({0, 1, 1, 1, 0});
  const ConfusionTable t = ConfusionTable::from(a, b);
  CHECK(t.n == 5);
  std::uint32_t total = 0;
  for (std::size_t i = 0; i < t.row_sums.size(); ++i) {
    std::uint32_t row = 0;
    for (std::size_t j = 0; j < t.col_sums.size(); ++j) row += t.counts[i][j];
    CHECK(row == t.row_sums[i]);
    total += row;
  }
  CHECK(total == t.n);
}
