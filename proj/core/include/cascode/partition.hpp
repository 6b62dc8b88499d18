#pragma once

#include <cstdint>
#include <vector>

namespace cascode {

/// Hard partition of nodes 0..size()-1 into communities labeled 0..label_count()-1.
/// Labels are always contiguous: every value below label_count() occurs.
class Partition {
public:
  Partition() = default;

  /// Wraps labels that are already compacted to 0..k-1. Throws
  /// std::invalid_argument otherwise.
  static Partition from_labels(std::vector<std::uint32_t> labels);

  /// Remaps arbitrary label values onto 0..k-1, preserving their ascending
  /// order, and wraps the result.
  static Partition compacted(std::vector<std::uint32_t> raw);

  std::size_t size() const noexcept { return labels_.size(); }
  std::uint32_t label_count() const noexcept { return label_count_; }
  std::uint32_t operator[](std::size_t v) const { return labels_[v]; }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }

  bool operator==(const Partition& other) const = default;

private:
  std::vector<std::uint32_t> labels_;
  std::uint32_t label_count_ = 0;
};

}  // namespace cascode
