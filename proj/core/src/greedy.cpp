#include "cascode/greedy.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace cascode {

Partition greedy_modularity_partition(const Graph& g,
                                      std::vector<GreedyStep>* steps) {
  const std::uint32_t n = g.node_count();
  if (g.edge_count() == 0)
    throw std::invalid_argument("modularity undefined for edgeless graph");
  const double m = static_cast<double>(g.edge_count());

  std::vector<std::uint32_t> comm(n);
  std::iota(comm.begin(), comm.end(), 0u);

  // Ordered maps so the pair scan visits (a, b) in ascending lexicographic
  // order; a strict improvement test then lands gain ties on the smallest
  // pair. links holds inter-community edge counts, both directions.
  std::map<std::uint32_t, double> deg_sum;
  std::map<std::uint32_t, std::map<std::uint32_t, std::uint32_t>> links;
  for (NodeId v = 0; v < n; ++v) {
    deg_sum[v] = static_cast<double>(g.degree(v));
    for (NodeId u : g.neighbors(v))
      if (u < v) {
        ++links[u][v];
        ++links[v][u];
      }
  }

  double q = 0.0;
  for (const auto& [c, d] : deg_sum) {
    const double frac = d / (2.0 * m);
    q -= frac * frac;
  }

  while (true) {
    bool found = false;
    std::uint32_t best_a = 0, best_b = 0;
    double best_dq = 0.0;
    for (const auto& [a, nbrs] : links) {
      for (const auto& [b, e_ab] : nbrs) {
        if (b <= a) continue;
        const double dq =
            e_ab / m - deg_sum[a] * deg_sum[b] / (2.0 * m * m);
        if (!found || dq > best_dq) {
          found = true;
          best_a = a;
          best_b = b;
          best_dq = dq;
        }
      }
    }
    if (!found || best_dq <= 0.0) break;

    deg_sum[best_a] += deg_sum[best_b];
    deg_sum.erase(best_b);
    for (const auto& [c, w] : links[best_b]) {
      if (c == best_a) continue;
      links[best_a][c] += w;
      links[c][best_a] += w;
      links[c].erase(best_b);
    }
    links[best_a].erase(best_b);
    links.erase(best_b);
    for (std::uint32_t& c : comm)
      if (c == best_b) c = best_a;

    q += best_dq;
    if (steps) steps->push_back(GreedyStep{best_a, best_b, best_dq, q});
  }

  return Partition::compacted(std::move(comm));
}

}  // namespace cascode
