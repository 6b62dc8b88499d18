#pragma once

#include <cstdint>
#include <vector>

#include "cascode/graph.hpp"
#include "cascode/partition.hpp"

namespace cascode {

/// Label co-occurrence counts between two partitions of the same node set.
struct ConfusionTable {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> counts;  // label_count(a) x label_count(b)
  std::vector<std::uint32_t> row_sums;
  std::vector<std::uint32_t> col_sums;

  /// Throws std::invalid_argument if the partitions differ in size.
  static ConfusionTable from(const Partition& a, const Partition& b);
};

/// Newman-Girvan modularity Q = (1/2m) sum_ij (A_ij - k_i k_j / 2m) delta(c_i, c_j),
/// in [-1/2, 1). Throws std::invalid_argument for an edgeless graph or when
/// the partition does not cover the graph's nodes.
double modularity(const Graph& g, const Partition& p);

/// Normalized mutual information, 2 I(A;B) / (H(A) + H(B)) with natural
/// logarithms. Returns exactly 1.0 iff the partitions are equal up to label
/// renaming (including two trivial single-block partitions, where the
/// formula degenerates to 0/0), and 0.0 for statistically independent ones.
double nmi(const Partition& a, const Partition& b);

}  // namespace cascode
