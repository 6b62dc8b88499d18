#include "cascode/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cascode {

ConfusionTable ConfusionTable::from(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("partitions cover different node sets (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + " nodes)");
  }
  ConfusionTable t;
  t.n = a.size();
  t.counts.assign(a.label_count(), std::vector<std::uint32_t>(b.label_count(), 0));
  t.row_sums.assign(a.label_count(), 0);
  t.col_sums.assign(b.label_count(), 0);
  for (std::size_t v = 0; v < t.n; ++v) {
    ++t.counts[a[v]][b[v]];
    ++t.row_sums[a[v]];
    ++t.col_sums[b[v]];
  }
  return t;
}

double modularity(const Graph& g, const Partition& p) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("modularity undefined for edgeless graph");
  }
  if (p.size() != g.node_count()) {
    throw std::invalid_argument("partition covers " + std::to_string(p.size()) +
                                " nodes, graph has " + std::to_string(g.node_count()));
  }

  const double m = static_cast<double>(g.edge_count());
  std::vector<std::uint64_t> intra(p.label_count(), 0);
  std::vector<std::uint64_t> degree_sum(p.label_count(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    degree_sum[p[u]] += g.degree(u);
    for (const NodeId v : g.neighbors(u)) {
      if (v > u && p[v] == p[u]) ++intra[p[u]];
    }
  }

  double q = 0.0;
  for (std::uint32_t c = 0; c < p.label_count(); ++c) {
    const double frac = static_cast<double>(degree_sum[c]) / (2.0 * m);
    q += static_cast<double>(intra[c]) / m - frac * frac;
  }
  return q;
}

namespace {

// every row and column hitting exactly one cell means the partitions are
// equal up to label renaming
bool equal_up_to_relabel(const ConfusionTable& t) {
  if (t.row_sums.size() != t.col_sums.size()) return false;
  std::vector<std::uint32_t> col_hits(t.col_sums.size(), 0);
  for (const auto& row : t.counts) {
    std::uint32_t row_hits = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] > 0) {
        ++row_hits;
        ++col_hits[j];
      }
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(),
                     [](std::uint32_t h) { return h == 1; });
}

}  // namespace

double nmi(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("partitions cover different node sets (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + " nodes)");
  }
  // the mutual-information sum below accumulates in table order, so pick a
  // canonical argument order to keep nmi(a, b) bit-identical to nmi(b, a)
  if (b.labels() < a.labels()) return nmi(b, a);
  const ConfusionTable t = ConfusionTable::from(a, b);
  if (equal_up_to_relabel(t)) return 1.0;

  const double n = static_cast<double>(t.n);
  double h_a = 0.0;
  for (const auto r : t.row_sums) {
    if (r > 0) h_a -= (r / n) * std::log(r / n);
  }
  double h_b = 0.0;
  for (const auto c : t.col_sums) {
    if (c > 0) h_b -= (c / n) * std::log(c / n);
  }

  double info = 0.0;
  for (std::size_t i = 0; i < t.row_sums.size(); ++i) {
    for (std::size_t j = 0; j < t.col_sums.size(); ++j) {
      const auto nij = t.counts[i][j];
      if (nij == 0) continue;
      info += (nij / n) * std::log(n * nij /
                                   (static_cast<double>(t.row_sums[i]) * t.col_sums[j]));
    }
  }

  const double value = 2.0 * info / (h_a + h_b);
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace cascode
