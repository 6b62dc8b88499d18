#pragma once

#include <cstdint>
#include <string>

#include "cascode/graph.hpp"
#include "cascode/partition.hpp"

namespace cascode {

/// A generated benchmark network together with its planted communities and
/// an echo of the parameters that produced it.
struct PlantedNetwork {
  Graph graph;
  Partition truth;
  std::string params;
};

/// The default inter-block probability used for planted-partition runs when
/// none is given: expected external degree 2 per node.
constexpr double default_gn_p_out(std::uint32_t k, std::uint32_t n) {
  return 2.0 / (static_cast<double>(n) * (static_cast<double>(k) - 1.0));
}

inline constexpr double kDefaultGnPIn = 0.9;

/// Planted-partition (GN style) benchmark: k blocks of n nodes, each
/// intra-block pair joined with probability p_in, each inter-block pair with
/// p_out. Requires k >= 2, n >= 2 and 0 <= p_out <= p_in <= 1. Output is a
/// pure function of the arguments, bit-identical across platforms.
PlantedNetwork gn_benchmark(std::uint32_t k, std::uint32_t n, double p_in,
                            double p_out, std::uint64_t seed);

enum class Wiring { kRing, kComplete };

/// k cliques of s nodes each; clique c occupies ids [c*s, (c+1)*s) and its
/// first node c*s is the designated leader carrying all external edges.
/// Leaders are wired ring or complete (for k = 2 both degenerate to a single
/// leader-leader edge). Requires k >= 2, s >= 3, which keeps at least two
/// fully-internal nodes per clique. Construction is deterministic; the seed
/// is only echoed into params.
PlantedNetwork clique_constellation(std::uint32_t k, std::uint32_t s,
                                    Wiring wiring, std::uint64_t seed);

/// The Zachary karate club network (34 nodes, 78 edges), embedded as a
/// compiled-in edge list with the conventional 1-based node names.
Graph karate_club();

}  // namespace cascode
