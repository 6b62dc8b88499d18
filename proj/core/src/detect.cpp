#include "cascode/detect.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "cascode/rng.hpp"

namespace cascode {

std::vector<std::uint32_t> salt_permutation(std::uint32_t node_count,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_permutation(node_count, rng);
}

std::vector<NodeId> find_leaders(const Graph& g, const CentralityMap& scores) {
  if (scores.size() != g.node_count())
    throw std::invalid_argument("centrality map does not match graph");
  std::vector<NodeId> leaders;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    bool top = true;
    for (NodeId u : g.neighbors(v)) {
      if (scores[v] < scores[u]) {
        top = false;
        break;
      }
    }
    if (top) leaders.push_back(v);
  }
  return leaders;
}

CascadeResult cascade_assign(const Graph& g, const CentralityMap& scores,
                             const std::vector<NodeId>& leaders,
                             std::uint64_t seed) {
  const std::uint32_t n = g.node_count();
  if (scores.size() != n)
    throw std::invalid_argument("centrality map does not match graph");

  const auto salt = salt_permutation(n, seed);
  auto key_of = [&](NodeId v) { return TieBreakKey{scores[v], salt[v]}; };
  auto by_key_desc = [&](NodeId a, NodeId b) {
    return key_above(key_of(a), key_of(b));
  };

  CascadeResult out;
  out.labels.assign(n, kNoLabel);
  out.trace.leader_set = leaders;

  std::vector<NodeId> order = leaders;
  std::sort(order.begin(), order.end(), by_key_desc);
  for (std::uint32_t rank = 0; rank < order.size(); ++rank)
    out.labels[order[rank]] = rank;
  out.trace.leader_order = order;

  // Neighbor lists are stored ascending, so claims inside one event come out
  // in ascending node-id order without extra work.
  std::vector<NodeId> frontier = std::move(order);
  while (!frontier.empty()) {
    std::vector<ClaimEvent> events;
    std::vector<NodeId> next;
    for (NodeId claimer : frontier) {
      ClaimEvent ev{claimer, {}};
      for (NodeId u : g.neighbors(claimer)) {
        if (out.labels[u] == kNoLabel) {
          out.labels[u] = out.labels[claimer];
          ev.claimed.push_back(u);
        }
      }
      if (!ev.claimed.empty()) {
        next.insert(next.end(), ev.claimed.begin(), ev.claimed.end());
        events.push_back(std::move(ev));
      }
    }
    if (events.empty()) break;
    out.trace.rounds.push_back(std::move(events));
    std::sort(next.begin(), next.end(), by_key_desc);
    frontier = std::move(next);
  }
  return out;
}

Partition reassign_orphan_leaders(const Graph& g, const CentralityMap& scores,
                                  std::vector<std::uint32_t> labels,
                                  CascadeTrace& trace, std::uint64_t seed) {
  const std::uint32_t n = g.node_count();
  if (scores.size() != n || labels.size() != n)
    throw std::invalid_argument("scores or labels do not match graph");

  const auto salt = salt_permutation(n, seed);
  auto key_of = [&](NodeId v) { return TieBreakKey{scores[v], salt[v]}; };

  std::vector<bool> claimed_any(n, false);
  if (!trace.rounds.empty())
    for (const ClaimEvent& ev : trace.rounds.front()) claimed_any[ev.claimer] = true;

  // leader_order is already descending by key, which is the sweep order.
  // Reassignments are applied as the sweep goes, so later orphans see the
  // labels earlier ones settled on.
  for (NodeId leader : trace.leader_order) {
    if (claimed_any[leader] || g.degree(leader) == 0) continue;

    std::unordered_map<std::uint32_t, std::uint32_t> votes;
    for (NodeId u : g.neighbors(leader)) ++votes[labels[u]];
    std::uint32_t best_count = 0;
    for (const auto& [label, count] : votes) best_count = std::max(best_count, count);

    bool have = false;
    NodeId best_nbr = 0;
    for (NodeId u : g.neighbors(leader)) {
      if (votes[labels[u]] != best_count) continue;
      if (!have || key_above(key_of(u), key_of(best_nbr))) {
        best_nbr = u;
        have = true;
      }
    }
    const std::uint32_t new_label = labels[best_nbr];
    trace.orphan_reassignments.push_back({leader, labels[leader], new_label});
    labels[leader] = new_label;
  }
  return Partition::compacted(std::move(labels));
}

DetectResult detect(const Graph& g, std::uint64_t seed) {
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");
  const CentralityMap scores = betweenness(g);
  const std::vector<NodeId> leaders = find_leaders(g, scores);
  CascadeResult cascade = cascade_assign(g, scores, leaders, seed);
  Partition partition = reassign_orphan_leaders(g, scores, std::move(cascade.labels),
                                                cascade.trace, seed);
  return DetectResult{std::move(partition), std::move(cascade.trace)};
}

}  // namespace cascode
