#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "cascode/centrality.hpp"
#include "cascode/graph.hpp"
#include "cascode/partition.hpp"

namespace cascode {

/// Sentinel for nodes not yet claimed during the cascade.
inline constexpr std::uint32_t kNoLabel = std::numeric_limits<std::uint32_t>::max();

/// Strict total order over nodes: betweenness score first, then a salt taken
/// from a seed-determined permutation of the node ids. Salts are distinct, so
/// ties on score never remain ties.
struct TieBreakKey {
  double score;
  std::uint32_t salt;
};

/// True when `a` ranks above `b` (higher score, then higher salt).
constexpr bool key_above(const TieBreakKey& a, const TieBreakKey& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.salt > b.salt;
}

/// The salt permutation all tie-breaking derives from. Every draw for a
/// given (node_count, seed) is identical across runs and platforms.
std::vector<std::uint32_t> salt_permutation(std::uint32_t node_count,
                                            std::uint64_t seed);

/// One claim during the cascade: `claimer` labeled `claimed` (ascending ids)
/// with its own community label.
struct ClaimEvent {
  NodeId claimer;
  std::vector<NodeId> claimed;
};

struct OrphanReassignment {
  NodeId leader;
  std::uint32_t old_label;
  std::uint32_t new_label;
};

/// Audit record of a full detection run. Replaying leader_order label
/// assignment, then every claim, then every reassignment reproduces the
/// pre-compaction labeling exactly.
struct CascadeTrace {
  std::vector<NodeId> leader_set;    // ascending node id
  std::vector<NodeId> leader_order;  // descending TieBreakKey; rank = label
  std::vector<std::vector<ClaimEvent>> rounds;
  std::vector<OrphanReassignment> orphan_reassignments;
};

/// Leaders are the nodes whose betweenness is >= that of every neighbor
/// (non-strict, so symmetric ties elect both sides). Isolated nodes qualify
/// vacuously. Returned ascending by node id.
std::vector<NodeId> find_leaders(const Graph& g, const CentralityMap& scores);

struct CascadeResult {
  std::vector<std::uint32_t> labels;  // total after the cascade, not compacted
  CascadeTrace trace;
};

/// Labels each leader with its descending-key rank, then propagates labels
/// outward in rounds: the frontier (initially the leaders), processed in
/// descending key order, claims all currently unlabeled neighbors in
/// ascending node-id order; the claimed nodes form the next frontier.
/// Terminates once nothing is left to claim; every node ends up labeled
/// because every connected component contains at least one leader.
CascadeResult cascade_assign(const Graph& g, const CentralityMap& scores,
                             const std::vector<NodeId>& leaders,
                             std::uint64_t seed);

/// Reassigns every leader that claimed no follower in round 1 and has at
/// least one neighbor: in descending key order, each takes the plurality
/// label among its neighbors' current labels (plurality ties go to the label
/// of the highest-key neighbor holding one). Isolated nodes and leaders with
/// followers keep their labels. Returns the compacted partition and appends
/// the reassignments to `trace`.
Partition reassign_orphan_leaders(const Graph& g, const CentralityMap& scores,
                                  std::vector<std::uint32_t> labels,
                                  CascadeTrace& trace, std::uint64_t seed);

struct DetectResult {
  Partition partition;
  CascadeTrace trace;
};

/// Full pipeline: betweenness -> find_leaders -> cascade_assign ->
/// reassign_orphan_leaders. Deterministic function of (g, seed). Throws
/// std::invalid_argument for a graph with no nodes.
DetectResult detect(const Graph& g, std::uint64_t seed);

}  // namespace cascode
