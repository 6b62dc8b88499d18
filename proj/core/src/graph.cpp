#include "cascode/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace cascode {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

Graph Graph::from_edges(NodeId node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g;
  g.adjacency_.resize(node_count);
  std::vector<std::pair<NodeId, NodeId>> kept;
  kept.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) continue;
    kept.emplace_back(u, v);
  }
  g.finalize(std::move(kept));
  return g;
}

void Graph::finalize(std::vector<std::pair<NodeId, NodeId>>&& edges) {
  for (const auto& [u, v] : edges) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  edge_count_ = 0;
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

void Graph::check_node(NodeId v) const {
  if (v >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range (" +
                            std::to_string(node_count()) + " nodes)");
  }
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
  check_node(v);
  return adjacency_[v];
}

NodeId Graph::degree(NodeId v) const {
  check_node(v);
  return static_cast<NodeId>(adjacency_[v].size());
}

std::string Graph::display_name(NodeId v) const {
  check_node(v);
  if (has_names()) return names_[v];
  return std::to_string(v);
}

std::optional<NodeId> Graph::id_of(std::string_view name) const {
  auto it = name_to_id_.find(std::string(name));
  if (it == name_to_id_.end()) return std::nullopt;
  return it->second;
}

bool Graph::operator==(const Graph& other) const {
  return adjacency_ == other.adjacency_ && names_ == other.names_;
}

Graph parse_edge_list(std::istream& in) {
  Graph g;
  std::vector<std::pair<NodeId, NodeId>> edges;
  auto intern = [&g](const std::string& name) -> NodeId {
    auto [it, inserted] =
        g.name_to_id_.try_emplace(name, static_cast<NodeId>(g.names_.size()));
    if (inserted) g.names_.push_back(name);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream tokens(line);
    std::string a, b, extra;
    tokens >> a >> b;
    if (b.empty() || (tokens >> extra)) {
      std::size_t count = b.empty() ? 1 : 3;
      while (count == 3 && (tokens >> extra)) ++count;
      throw ParseError(line_no, "expected two node names, found " +
                                    std::to_string(count) + " token(s)");
    }
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    if (u != v) edges.emplace_back(u, v);
  }

  if (g.names_.empty()) throw ParseError(0, "empty graph");
  g.adjacency_.resize(g.names_.size());
  g.finalize(std::move(edges));
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  // Node v's lines come after those of every smaller node, and a node with
  // no smaller neighbor gets a self-loop line to introduce it. First
  // appearances therefore run 0, 1, 2, ... and re-parsing re-assigns the
  // same ids to the same nodes.
  std::ostringstream out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto& adj = g.neighbors(v);
    bool needs_intro;
    if (adj.empty()) {
      needs_intro = true;
    } else if (v == 0) {
      // an edge 0-1 makes node 1's first line "0 1", introducing both
      needs_intro = adj.front() != 1;
    } else {
      needs_intro = adj.front() >= v;
    }
    if (needs_intro)
      out << g.display_name(v) << ' ' << g.display_name(v) << '\n';
    for (NodeId u : adj) {
      if (u >= v) break;
      out << g.display_name(u) << ' ' << g.display_name(v) << '\n';
    }
  }
  return out.str();
}

}  // namespace cascode
