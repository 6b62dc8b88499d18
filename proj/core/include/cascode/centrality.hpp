#pragma once

#include <vector>

#include "cascode/graph.hpp"

namespace cascode {

/// One betweenness score per node id. All scores are >= 0; degree-0 nodes
/// score exactly 0.
using CentralityMap = std::vector<double>;

/// Exact shortest-path betweenness via Brandes' algorithm.
///
/// score(v) = sum over unordered pairs {s,t}, s != v != t, of
/// sigma_st(v) / sigma_st, where sigma_st counts shortest s-t paths and
/// sigma_st(v) those with v as an interior vertex. Unreachable pairs
/// contribute 0. Unnormalized; each unordered pair counted once.
///
/// Per-source contributions are summed in ascending source-id order, so the
/// result is bit-identical across runs.
CentralityMap betweenness(const Graph& g);

/// Same contract as betweenness(), computed by explicitly enumerating every
/// shortest path of every pair. Test oracle only; throws
/// std::invalid_argument for graphs with more than 16 nodes.
CentralityMap brute_force_betweenness(const Graph& g);

}  // namespace cascode
