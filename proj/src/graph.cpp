#include "xform/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace xform {

namespace {

std::uint64_t pair_key(int u, int v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph::Graph(int n, std::vector<EdgeLabel> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)) {
  pair_keys_.reserve(edges_.size() * 2);
  for (const EdgeLabel& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    pair_keys_.insert(pair_key(e.u, e.v));
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<EdgeLabel> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ") with n = " + std::to_string(n));
    if (a == b) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(a));
    canon.push_back(make_edge_label(a, b));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return Graph(n, std::move(canon));
}

std::span<const int> Graph::neighbors(int v) const { return adj_.at(v); }

int Graph::degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return pair_keys_.contains(pair_key(u, v));
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.edge_count());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

bool graphs_equal(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        todo.push(w);
      }
    }
  }
  return reached == n;
}

namespace {

[[noreturn]] void fail_line(int lineno, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1, seen = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n)) {
        n = -1;  // blank or comment-only line before the header
        continue;
      }
      std::string extra;
      if (!(ls >> m) || (ls >> extra))
        fail_line(lineno, "expected header 'n m'");
      if (n < 1) fail_line(lineno, "vertex count must be at least 1");
      if (n > std::numeric_limits<int>::max()) fail_line(lineno, "vertex count too large");
      if (m < 0 || m > n * (n - 1) / 2) fail_line(lineno, "edge count out of range");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    long long u, v;
    if (!(ls >> u)) continue;
    std::string extra;
    if (!(ls >> v) || (ls >> extra)) fail_line(lineno, "expected edge 'u v'");
    if (seen == m) fail_line(lineno, "more edges than the header announced");
    if (u < 0 || u >= n || v < 0 || v >= n) fail_line(lineno, "edge endpoint out of range");
    if (u == v) fail_line(lineno, "self-loop rejected");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (n < 0) throw std::runtime_error("edge-list input is empty");
  if (seen < m)
    throw std::runtime_error("expected " + std::to_string(m) + " edges, found " +
                             std::to_string(seen));
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const EdgeLabel& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace xform
