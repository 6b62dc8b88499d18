#include "cascode/centrality.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace cascode {

namespace {

constexpr std::int32_t kUnreached = -1;

void bfs_distances(const Graph& g, NodeId source, std::vector<std::int32_t>& dist,
                   std::vector<NodeId>& queue) {
  dist.assign(g.node_count(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (const NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

CentralityMap betweenness(const Graph& g) {
  const NodeId n = g.node_count();
  CentralityMap score(n, 0.0);

  std::vector<std::int32_t> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::vector<NodeId>> preds(n);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    dist.assign(n, kUnreached);
    sigma.assign(n, 0.0);
    delta.assign(n, 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId u = order[head];
      for (const NodeId w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) {
          sigma[w] += sigma[u];
          preds[w].push_back(u);
        }
      }
    }

    // dependency accumulation in reverse BFS order
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      const double coeff = (1.0 + delta[w]) / sigma[w];
      for (const NodeId p : preds[w]) delta[p] += sigma[p] * coeff;
      if (w != s) score[w] += delta[w];
    }
  }

  // every unordered pair was visited from both endpoints
  for (auto& x : score) x *= 0.5;
  return score;
}

CentralityMap brute_force_betweenness(const Graph& g) {
  const NodeId n = g.node_count();
  if (n > 16) {
    throw std::invalid_argument(
        "brute_force_betweenness is limited to 16 nodes, got " + std::to_string(n));
  }
  CentralityMap score(n, 0.0);

  std::vector<std::int32_t> dist(n);
  std::vector<NodeId> queue;
  std::vector<NodeId> interior;
  std::vector<std::uint64_t> through(n);

  for (NodeId s = 0; s < n; ++s) {
    bfs_distances(g, s, dist, queue);
    for (NodeId t = s + 1; t < n; ++t) {
      if (dist[t] < 2) continue;  // unreachable or adjacent: no interior vertex

      // walk every shortest path backwards from t, counting interior visits
      through.assign(n, 0);
      interior.clear();
      std::uint64_t total_paths = 0;
      auto walk = [&](auto&& self, NodeId x) -> void {
        if (x == s) {
          ++total_paths;
          for (const NodeId v : interior) ++through[v];
          return;
        }
        for (const NodeId y : g.neighbors(x)) {
          if (dist[y] + 1 != dist[x]) continue;
          if (y != s) interior.push_back(y);
          self(self, y);
          if (y != s) interior.pop_back();
        }
      };
      walk(walk, t);

      for (NodeId v = 0; v < n; ++v) {
        if (through[v] > 0) {
          score[v] += static_cast<double>(through[v]) / static_cast<double>(total_paths);
        }
      }
    }
  }
  return score;
}

}  // namespace cascode
