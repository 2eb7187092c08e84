#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "xform/generators.hpp"
#include "xform/graph.hpp"

using namespace xform;

TEST_CASE("from_edge_list builds a simple graph") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(3, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(1, 1));
  CHECK(g.degree(0) == 2);
  CHECK(g.neighbors(1).size() == 2);
  CHECK(g.neighbors(1)[0] == 0);
  CHECK(g.neighbors(1)[1] == 2);
}

TEST_CASE("from_edge_list canonicalizes and dedupes") {
  const Graph g = Graph::from_edge_list(3, {{1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
  CHECK(g.edges()[0] == EdgeLabel{0, 1});
}

TEST_CASE("from_edge_list accepts the one-vertex graph") {
  const Graph g = Graph::from_edge_list(1, {});
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(g.degree(0) == 0);
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(-2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("edge labels sort lexicographically") {
  const Graph g = Graph::from_edge_list(4, {{2, 3}, {0, 3}, {0, 1}, {1, 2}});
  const std::vector<EdgeLabel> want = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  CHECK(g.edges() == want);
}

TEST_CASE("degree sum equals twice the edge count") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const Graph g = make_random_gnm(n, max_m / 2, seed);
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v) total += g.degree(v);
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("complement of the complete graph is edgeless") {
  const Graph k4c = complement(make_complete(4));
  CHECK(k4c.vertex_count() == 4);
  CHECK(k4c.edge_count() == 0);
}

TEST_CASE("complement of a five-cycle is 2-regular on five edges") {
  const Graph c = complement(make_cycle(5));
  CHECK(c.vertex_count() == 5);
  CHECK(c.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c.degree(v) == 2);
}

TEST_CASE("complement is an involution") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = make_random_gnm(7, 9, seed);
    CHECK(graphs_equal(complement(complement(g)), g));
  }
}

TEST_CASE("graphs_equal is labeled equality") {
  const Graph a = Graph::from_edge_list(3, {{0, 1}});
  const Graph b = Graph::from_edge_list(3, {{1, 0}});
  const Graph c = Graph::from_edge_list(3, {{1, 2}});
  const Graph d = Graph::from_edge_list(4, {{0, 1}});
  CHECK(graphs_equal(a, b));
  CHECK_FALSE(graphs_equal(a, c));  // isomorphic but differently labeled
  CHECK_FALSE(graphs_equal(a, d));
}

TEST_CASE("is_connected") {
  CHECK(is_connected(make_path(1)));
  CHECK(is_connected(make_cycle(5)));
  CHECK_FALSE(is_connected(Graph::from_edge_list(4, {{0, 1}})));
  CHECK_FALSE(is_connected(Graph::from_edge_list(2, {})));
}

TEST_CASE("generators produce the expected degree sequences") {
  const Graph p4 = make_path(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 2);

  const Graph c4 = make_cycle(4);
  CHECK(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

  const Graph k5 = make_complete(5);
  CHECK(k5.edge_count() == 10);
  for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

  const Graph s4 = make_star(4);  // K_{1,3}
  CHECK(s4.edge_count() == 3);
  CHECK(s4.degree(0) == 3);
  for (int v = 1; v < 4; ++v) CHECK(s4.degree(v) == 1);

  const Graph k23 = make_complete_bipartite(2, 3);
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(k23.degree(0) == 3);
  CHECK(k23.degree(2) == 2);
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK(k23.adjacent(0, 2));
}

TEST_CASE("generator bounds are enforced") {
  CHECK_THROWS_AS(make_path(0), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_star(1), std::invalid_argument);
  CHECK_THROWS_AS(make_complete(0), std::invalid_argument);
  CHECK_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_random_gnm(4, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_random_gnm(4, -1, 1), std::invalid_argument);
}

TEST_CASE("random_gnm is deterministic per seed and covers the range") {
  const Graph a = make_random_gnm(9, 14, 42);
  const Graph b = make_random_gnm(9, 14, 42);
  CHECK(graphs_equal(a, b));
  CHECK(a.vertex_count() == 9);
  CHECK(a.edge_count() == 14);
  const Graph c = make_random_gnm(9, 14, 43);
  CHECK_FALSE(graphs_equal(a, c));  // overwhelmingly unlikely to collide

  CHECK(make_random_gnm(6, 0, 7).edge_count() == 0);
  const Graph full = make_random_gnm(6, 15, 7);
  CHECK(graphs_equal(full, make_complete(6)));
}

TEST_CASE("edge-list round trip") {
  const Graph g = make_random_gnm(8, 11, 3);
  std::stringstream buf;
  write_edge_list(buf, g);
  CHECK(graphs_equal(read_edge_list(buf), g));
}

TEST_CASE("edge-list reader handles comments and blanks") {
  std::istringstream in(
      "# a four-cycle\n"
      "\n"
      "4 4\n"
      "0 1  # first edge\n"
      "1 2\n"
      "\n"
      "2 3\n"
      "3 0\n");
  const Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(3, 0));
}

TEST_CASE("edge-list reader reports the offending line") {
  std::istringstream bad_header("4\n");
  CHECK_THROWS_WITH_AS(read_edge_list(bad_header), "line 1: expected header 'n m'",
                       std::runtime_error);

  std::istringstream bad_edge("3 2\n0 1\n0 9\n");
  CHECK_THROWS_WITH_AS(read_edge_list(bad_edge), "line 3: edge endpoint out of range",
                       std::runtime_error);

  std::istringstream extra("3 1\n0 1\n1 2\n");
  CHECK_THROWS_WITH_AS(read_edge_list(extra), "line 3: more edges than the header announced",
                       std::runtime_error);

  std::istringstream missing("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(missing), std::runtime_error);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), std::runtime_error);
}
