#include "cascode/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cascode {

Partition Partition::from_labels(std::vector<std::uint32_t> labels) {
  std::uint32_t max_label = 0;
  for (auto l : labels) max_label = std::max(max_label, l);
  const std::uint32_t k = labels.empty() ? 0 : max_label + 1;
  std::vector<bool> seen(k, false);
  for (auto l : labels) seen[l] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("partition labels are not contiguous");
  }
  Partition p;
  p.labels_ = std::move(labels);
  p.label_count_ = k;
  return p;
}

Partition Partition::compacted(std::vector<std::uint32_t> raw) {
  std::vector<std::uint32_t> distinct(raw);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& l : raw) {
    l = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), l) - distinct.begin());
  }
  Partition p;
  p.labels_ = std::move(raw);
  p.label_count_ = static_cast<std::uint32_t>(distinct.size());
  return p;
}

}  // namespace cascode
