#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cascode {

using NodeId = std::uint32_t;

/// Thrown when edge-list text cannot be parsed. Carries the 1-based line
/// number of the offending line (0 when the input as a whole is at fault).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Undirected simple graph over dense node ids 0..node_count()-1.
///
/// Adjacency lists are sorted ascending, symmetric, and free of self-loops
/// and duplicates. Instances are immutable after construction, so concurrent
/// reads are safe.
class Graph {
public:
  Graph() = default;

  /// Builds a graph with `node_count` nodes from an explicit edge list.
  /// Self-loops are dropped and duplicate edges (in either orientation)
  /// collapse to one. Endpoints must be < node_count.
  static Graph from_edges(NodeId node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  NodeId node_count() const noexcept { return static_cast<NodeId>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Sorted neighbor ids of `v`; empty for isolated nodes.
  const std::vector<NodeId>& neighbors(NodeId v) const;
  NodeId degree(NodeId v) const;

  /// True when the graph was parsed from named input and keeps the
  /// name <-> id table.
  bool has_names() const noexcept { return !names_.empty(); }

  /// External name of `v` if one exists, otherwise its decimal id.
  std::string display_name(NodeId v) const;

  /// Internal id of an external node name, if present.
  std::optional<NodeId> id_of(std::string_view name) const;

  bool operator==(const Graph& other) const;

private:
  friend Graph parse_edge_list(std::istream& in);

  void finalize(std::vector<std::pair<NodeId, NodeId>>&& edges);
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> name_to_id_;
};

/// Parses edge-list text: one edge per line as two whitespace-separated node
/// names. Blank lines and lines starting with '#' are skipped. Names map to
/// dense ids in order of first appearance. Self-loop lines keep the node but
/// drop the edge; duplicate edges collapse to one.
///
/// Throws ParseError for a line with the wrong token count and for input
/// that yields no nodes at all ("empty graph").
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Serializes back to edge-list text using external names when present.
/// Nodes without a smaller neighbor (isolated ones included) are written as
/// self-loop lines so that first appearances run in id order. Re-parsing the
/// result reproduces the graph exactly, ids included, whether it came from
/// parse_edge_list or from_edges.
std::string to_edge_list(const Graph& g);

}  // namespace cascode
