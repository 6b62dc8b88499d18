#include <algorithm>
#include <random>
#include <vector>

#include "cascode/benchgen.hpp"
#include "cascode/centrality.hpp"
#include "cascode/detect.hpp"
#include "cascode/graph.hpp"
#include "cascode/metrics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cascode;
using cascode::testing::random_graph;

namespace {

Graph barbell() {
  std::string text;
  const char* a[] = {"a1", "a2", "a3", "a4"};
  const char* b[] = {"b1", "b2", "b3", "b4"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      text += std::string(a[i]) + " " + a[j] + "\n";
      text += std::string(b[i]) + " " + b[j] + "\n";
    }
  text += "a1 b1\n";
  return parse_edge_list(text);
}

Graph complete_graph(std::uint32_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Re-applies the recorded trace from scratch; the result must equal the
// final partition after compaction.
Partition replay(const Graph& g, const CascadeTrace& trace) {
  std::vector<std::uint32_t> labels(g.node_count(), kNoLabel);
  for (std::uint32_t rank = 0; rank < trace.leader_order.size(); ++rank)
    labels[trace.leader_order[rank]] = rank;
  for (const auto& round : trace.rounds)
    for (const ClaimEvent& ev : round)
      for (NodeId v : ev.claimed) labels[v] = labels[ev.claimer];
  for (const OrphanReassignment& r : trace.orphan_reassignments)
    labels[r.leader] = r.new_label;
  return Partition::compacted(std::move(labels));
}

}  // namespace

TEST_CASE("leaders on a path") {
  const Graph g = parse_edge_list("a b\nb c");
  const auto leaders = find_leaders(g, betweenness(g));
  CHECK(leaders == std::vector<NodeId>{1});
}

TEST_CASE("equal-score bridge endpoints are both leaders") {
  const Graph g = barbell();
  const auto leaders = find_leaders(g, betweenness(g));
  CHECK(leaders == std::vector<NodeId>{*g.id_of("a1"), *g.id_of("b1")});
}

TEST_CASE("edgeless nodes are leaders vacuously") {
  const Graph g = parse_edge_list("a a\nb b\nc c");
  const auto leaders = find_leaders(g, betweenness(g));
  CHECK(leaders == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("leaders are local maxima and adjacent leaders tie exactly") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 12);
    const Graph g = random_graph(n, 0.35, rng);
    const CentralityMap c = betweenness(g);
    const auto leaders = find_leaders(g, c);
    CHECK(!leaders.empty());
    std::vector<bool> is_leader(n, false);
    for (NodeId l : leaders) is_leader[l] = true;
    for (NodeId l : leaders)
      for (NodeId u : g.neighbors(l)) {
        CHECK(c[l] >= c[u]);
        if (is_leader[u]) CHECK(c[l] == c[u]);
      }
  }
}

TEST_CASE("cascade on the barbell claims each clique in one round") {
  const Graph g = barbell();
  const CentralityMap c = betweenness(g);
  const auto leaders = find_leaders(g, c);
  const CascadeResult r = cascade_assign(g, c, leaders, 0);

  REQUIRE(r.trace.rounds.size() == 1);
  CHECK(r.trace.rounds[0].size() == 2);
  for (const ClaimEvent& ev : r.trace.rounds[0]) CHECK(ev.claimed.size() == 3);

  const NodeId a1 = *g.id_of("a1");
  for (const char* name : {"a2", "a3", "a4"})
    CHECK(r.labels[*g.id_of(name)] == r.labels[a1]);
  const NodeId b1 = *g.id_of("b1");
  for (const char* name : {"b2", "b3", "b4"})
    CHECK(r.labels[*g.id_of(name)] == r.labels[b1]);
  CHECK(r.labels[a1] != r.labels[b1]);
}

TEST_CASE("path center claims both ends at once") {
  const Graph g = parse_edge_list("a b\nb c");
  const CentralityMap c = betweenness(g);
  const CascadeResult r = cascade_assign(g, c, find_leaders(g, c), 3);
  REQUIRE(r.trace.rounds.size() == 1);
  REQUIRE(r.trace.rounds[0].size() == 1);
  CHECK(r.trace.rounds[0][0].claimer == NodeId{1});
  CHECK(r.trace.rounds[0][0].claimed == std::vector<NodeId>{0, 2});
  CHECK(r.labels == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("edgeless cascade has no rounds and keeps singletons") {
  const Graph g = parse_edge_list("a a\nb b\nc c");
  const CentralityMap c = betweenness(g);
  const CascadeResult r = cascade_assign(g, c, find_leaders(g, c), 1);
  CHECK(r.trace.rounds.empty());
  std::vector<std::uint32_t> sorted = r.labels;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("every non-leader is claimed exactly once") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 14);
    const Graph g = random_graph(n, 0.3, rng);
    const CentralityMap c = betweenness(g);
    const auto leaders = find_leaders(g, c);
    const CascadeResult r = cascade_assign(g, c, leaders, rng());

    std::vector<int> claims(n, 0);
    for (const auto& round : r.trace.rounds)
      for (const ClaimEvent& ev : round)
        for (NodeId v : ev.claimed) ++claims[v];
    std::vector<bool> is_leader(n, false);
    for (NodeId l : leaders) is_leader[l] = true;
    for (NodeId v = 0; v < n; ++v) {
      CHECK(claims[v] == (is_leader[v] ? 0 : 1));
      CHECK(r.labels[v] != kNoLabel);
    }
  }
}

TEST_CASE("orphan leader takes the plurality label of its neighbors") {
  // star center is in the leader order but claimed nothing; leaves hold
  // labels 1, 1, 2 from elsewhere
  const Graph g = parse_edge_list("c l1\nc l2\nc l3");
  CascadeTrace trace;
  trace.leader_set = {0};
  trace.leader_order = {0};
  std::vector<std::uint32_t> labels{0, 1, 1, 2};
  const CentralityMap scores{3.0, 0.0, 0.0, 0.0};
  const Partition p = reassign_orphan_leaders(g, scores, labels, trace, 0);

  REQUIRE(trace.orphan_reassignments.size() == 1);
  CHECK(trace.orphan_reassignments[0].leader == NodeId{0});
  CHECK(trace.orphan_reassignments[0].old_label == 0);
  CHECK(trace.orphan_reassignments[0].new_label == 1);
  CHECK(p[0] == p[1]);
  CHECK(p[0] == p[2]);
  CHECK(p[0] != p[3]);
}

TEST_CASE("leaders with followers and isolated nodes keep their labels") {
  const Graph g = barbell();
  const CentralityMap c = betweenness(g);
  const auto leaders = find_leaders(g, c);
  CascadeResult r = cascade_assign(g, c, leaders, 5);
  const auto before = r.labels;
  const Partition p = reassign_orphan_leaders(g, c, std::move(r.labels), r.trace, 5);
  CHECK(r.trace.orphan_reassignments.empty());
  CHECK(p == Partition::compacted(before));
}

TEST_CASE("complete graph collapses to one community for any seed") {
  const Graph k4 = complete_graph(4);
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const DetectResult r = detect(k4, seed);
    CHECK(r.partition.label_count() == 1);
    CHECK(r.trace.leader_set.size() == 4);
    CHECK(detect(k4, seed).partition == r.partition);
  }
}

TEST_CASE("detect on the barbell recovers the cliques") {
  const Graph g = barbell();
  const DetectResult r = detect(g, 0);
  CHECK(r.partition.label_count() == 2);
  const NodeId a1 = *g.id_of("a1");
  for (const char* name : {"a2", "a3", "a4"})
    CHECK(r.partition[*g.id_of(name)] == r.partition[a1]);
  CHECK(r.partition[*g.id_of("b1")] != r.partition[a1]);
}

TEST_CASE("ring of four triangles yields the four cliques") {
  const PlantedNetwork net = clique_constellation(4, 3, Wiring::kRing, 0);
  for (std::uint64_t seed : {0ull, 1ull, 17ull}) {
    const DetectResult r = detect(net.graph, seed);
    CHECK(nmi(r.partition, net.truth) == 1.0);
  }
}

TEST_CASE("single node forms one community") {
  const Graph g = parse_edge_list("only only");
  const DetectResult r = detect(g, 9);
  CHECK(r.partition.size() == 1);
  CHECK(r.partition[0] == 0);
}

TEST_CASE("empty graph is rejected") {
  CHECK_THROWS_WITH_AS(detect(Graph{}, 0), "empty graph", std::invalid_argument);
}

TEST_CASE("detect is deterministic and scale invariant") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 15; ++i) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 12);
    const Graph g = random_graph(n, 0.4, rng);
    const std::uint64_t seed = rng();
    const DetectResult r1 = detect(g, seed);
    CHECK(detect(g, seed).partition == r1.partition);

    const CentralityMap c = betweenness(g);
    for (double scale : {0.5, 2.0, 3.0}) {
      CentralityMap scaled = c;
      for (double& s : scaled) s *= scale;
      const auto leaders = find_leaders(g, scaled);
      CHECK(leaders == find_leaders(g, c));
      CascadeResult cr = cascade_assign(g, scaled, leaders, seed);
      const Partition p =
          reassign_orphan_leaders(g, scaled, std::move(cr.labels), cr.trace, seed);
      CHECK(p == r1.partition);
    }
  }
}

TEST_CASE("replaying the trace reproduces the partition") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 14);
    const Graph g = random_graph(n, 0.25, rng);
    const std::uint64_t seed = rng();
    const DetectResult r = detect(g, seed);
    CHECK(replay(g, r.trace) == r.partition);
    CHECK(r.partition.size() == g.node_count());
  }
}

TEST_CASE("disjoint single-clique blocks each collapse to one community") {
  for (std::uint32_t k = 2; k <= 5; ++k) {
    for (std::uint32_t n = 2; n <= 6; ++n) {
      const PlantedNetwork net = gn_benchmark(k, n, 1.0, 0.0, 7);
      const DetectResult r = detect(net.graph, 7);
      CHECK(nmi(r.partition, net.truth) == 1.0);
    }
  }
}

TEST_CASE("karate club detection pins its community count and modularity") {
  const Graph g = karate_club();
  for (std::uint64_t seed : {0ull, 1ull, 2ull, 3ull}) {
    const DetectResult r = detect(g, seed);
    CHECK(r.partition.label_count() == 2);
    CHECK(modularity(g, r.partition) ==
          doctest::Approx(0.28920118343195267).epsilon(1e-12));
  }
}
