#ifndef XFORM_GRAPH_HPP
#define XFORM_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace xform {

// Canonical unordered pair of vertices, stored with u < v and ordered
// lexicographically. Edge-vertices of transformation graphs are numbered in
// this order.
struct EdgeLabel {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

inline EdgeLabel make_edge_label(int a, int b) {
  return a < b ? EdgeLabel{a, b} : EdgeLabel{b, a};
}

// Labeled simple undirected graph on vertices 0..n-1. Immutable once built;
// self-loops and parallel edges are rejected, n >= 1. Disconnected graphs
// are accepted everywhere; use is_connected() when connectivity matters.
class Graph {
 public:
  // Canonicalizes, sorts and dedupes the edge list. Throws
  // std::invalid_argument on n < 1, out-of-range endpoints or self-loops.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<EdgeLabel>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

 private:
  Graph(int n, std::vector<EdgeLabel> edges);

  int n_ = 0;
  std::vector<EdgeLabel> edges_;       // sorted, unique
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  std::unordered_set<std::uint64_t> pair_keys_;
};

Graph complement(const Graph& g);

// Labeled equality: same vertex count and identical edge sets.
bool graphs_equal(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// '#' starts a comment anywhere on a line; blank lines are skipped. Parse
// errors name the offending line.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace xform

#endif
