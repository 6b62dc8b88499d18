#include "cascode/benchgen.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cascode/rng.hpp"
#include "cascode/text.hpp"

namespace cascode {

PlantedNetwork gn_benchmark(std::uint32_t k, std::uint32_t n, double p_in,
                            double p_out, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(0.0 <= p_out && p_out <= p_in && p_in <= 1.0))
    throw std::invalid_argument("need 0 <= p_out <= p_in <= 1");
  if (static_cast<std::uint64_t>(k) * n > 1u << 24)
    throw std::invalid_argument("network too large");

  const std::uint32_t total = k * n;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  // One draw per pair, in fixed (u, v) order, so whether an edge exists
  // depends only on the seed and the pair's position.
  for (NodeId u = 0; u < total; ++u) {
    for (NodeId v = u + 1; v < total; ++v) {
      const double draw = uniform_double(rng);
      const double p = (u / n == v / n) ? p_in : p_out;
      if (draw < p) edges.emplace_back(u, v);
    }
  }

  std::vector<std::uint32_t> labels(total);
  for (NodeId v = 0; v < total; ++v) labels[v] = v / n;

  std::ostringstream params;
  params << "gn k=" << k << " n=" << n << " p_in=" << format_double(p_in)
         << " p_out=" << format_double(p_out) << " seed=" << seed;
  return PlantedNetwork{Graph::from_edges(total, edges),
                        Partition::from_labels(std::move(labels)),
                        params.str()};
}

PlantedNetwork clique_constellation(std::uint32_t k, std::uint32_t s,
                                    Wiring wiring, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (s < 3) throw std::invalid_argument("s must be at least 3");
  if (static_cast<std::uint64_t>(k) * s > 1u << 24)
    throw std::invalid_argument("network too large");

  const std::uint32_t total = k * s;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::uint32_t c = 0; c < k; ++c) {
    const NodeId base = c * s;
    for (std::uint32_t i = 0; i < s; ++i)
      for (std::uint32_t j = i + 1; j < s; ++j)
        edges.emplace_back(base + i, base + j);
  }
  if (wiring == Wiring::kRing && k > 2) {
    for (std::uint32_t c = 0; c < k; ++c)
      edges.emplace_back(c * s, ((c + 1) % k) * s);
  } else if (wiring == Wiring::kRing) {
    edges.emplace_back(0, s);  // a 2-ring would double the same edge
  } else {
    for (std::uint32_t a = 0; a < k; ++a)
      for (std::uint32_t b = a + 1; b < k; ++b)
        edges.emplace_back(a * s, b * s);
  }

  std::vector<std::uint32_t> labels(total);
  for (NodeId v = 0; v < total; ++v) labels[v] = v / s;

  std::ostringstream params;
  params << "cliques k=" << k << " s=" << s << " wiring="
         << (wiring == Wiring::kRing ? "ring" : "complete") << " seed=" << seed;
  return PlantedNetwork{Graph::from_edges(total, edges),
                        Partition::from_labels(std::move(labels)),
                        params.str()};
}

namespace {

// Zachary's karate club, conventional 1-based numbering, one line per edge.
constexpr const char* kKarateEdges = R"(1 2
1 3
1 4
1 5
1 6
1 7
1 8
1 9
1 11
1 12
1 13
1 14
1 18
1 20
1 22
1 32
2 3
2 4
2 8
2 14
2 18
2 20
2 22
2 31
3 4
3 8
3 9
3 10
3 14
3 28
3 29
3 33
4 8
4 13
4 14
5 7
5 11
6 7
6 11
6 17
7 17
9 31
9 33
9 34
10 34
14 34
15 33
15 34
16 33
16 34
19 33
19 34
20 34
21 33
21 34
23 33
23 34
24 26
24 28
24 30
24 33
24 34
25 26
25 28
25 32
26 32
27 30
27 34
28 34
29 32
29 34
30 33
30 34
31 33
31 34
32 33
32 34
33 34
)";

}  // namespace

Graph karate_club() { return parse_edge_list(std::string_view(kKarateEdges)); }

}  // namespace cascode
