#pragma once

#include <cstdint>
#include <vector>

#include "cascode/graph.hpp"
#include "cascode/partition.hpp"

namespace cascode {

/// One agglomeration step: communities `a` and `b` merged (a < b, merged
/// community keeps label a), with the modularity gain taken and the running
/// modularity after the merge.
struct GreedyStep {
  std::uint32_t a;
  std::uint32_t b;
  double delta_q;
  double q_after;
};

/// Agglomerative modularity maximization. Starts from singletons, repeatedly
/// merges the connected community pair with the largest modularity gain
///   dQ = E_ab/m - d_a*d_b/(2m^2)
/// and stops when no merge has positive gain. Gain ties resolve to the
/// smallest (a, b) pair. Deterministic; no randomness involved. Throws
/// std::invalid_argument for an edgeless graph. Pass `steps` to record the
/// merge sequence.
Partition greedy_modularity_partition(const Graph& g,
                                      std::vector<GreedyStep>* steps = nullptr);

}  // namespace cascode
