#include "xform/generators.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace xform {

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "random_gnm") return Family::random_gnm;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::random_gnm: return "random_gnm";
  }
  return "?";
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edge_list(n, edges);
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph make_star(int n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs both parts nonempty");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, edges);
}

std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded_uniform needs bound >= 1");
  const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t r = rng();
  while (r < min) r = rng();
  return r % bound;
}

Graph make_random_gnm(int n, std::int64_t m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_gnm needs n >= 1");
  const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > max_m)
    throw std::invalid_argument("random_gnm needs 0 <= m <= n(n-1)/2 = " + std::to_string(max_m));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(max_m));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::mt19937_64 rng(seed);
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t j =
        i + static_cast<std::int64_t>(bounded_uniform(rng, static_cast<std::uint64_t>(max_m - i)));
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(static_cast<std::size_t>(m));
  return Graph::from_edge_list(n, pairs);
}

}  // namespace xform
