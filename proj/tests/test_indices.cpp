#include <doctest.h>

#include <stdexcept>

#include "xform/generators.hpp"
#include "xform/indices.hpp"

using namespace xform;

TEST_CASE("index_set on the four-cycle") {
  const IndexSet x = index_set(make_cycle(4));
  CHECK(x == IndexSet{4, 4, 16, 16, 32, 64, 64});
}

TEST_CASE("index_set on the claw") {
  const IndexSet x = index_set(make_star(4));
  CHECK(x == IndexSet{4, 3, 12, 9, 30, 84, 36});
}

TEST_CASE("index_set on the edgeless graph") {
  const IndexSet x = index_set(Graph::from_edge_list(5, {}));
  CHECK(x == IndexSet{5, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("regular graphs satisfy the power laws") {
  const auto check_regular = [](const Graph& g, std::int64_t k) {
    const IndexSet x = index_set(g);
    const std::int64_t n = x.n, m = x.m;
    CHECK(x.M1 == n * k * k);
    CHECK(x.F == n * k * k * k);
    CHECK(x.xi4 == n * k * k * k * k);
    CHECK(x.M2 == m * k * k);
    CHECK(x.rezg3 == 2 * m * k * k * k);
  };
  check_regular(make_cycle(7), 2);
  check_regular(make_complete(6), 5);
  check_regular(make_complete_bipartite(3, 3), 3);
}

TEST_CASE("edge_form_check holds on assorted graphs") {
  CHECK(edge_form_check(make_cycle(4)));
  CHECK(edge_form_check(make_star(4)));
  CHECK(edge_form_check(Graph::from_edge_list(1, {})));
  CHECK(edge_form_check(Graph::from_edge_list(6, {})));
  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    CHECK(edge_form_check(make_random_gnm(9, static_cast<std::int64_t>(seed), seed)));
}

TEST_CASE("rezg3 agrees with its expanded edge form") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = make_random_gnm(8, 13, seed);
    const IndexSet x = index_set(g);
    std::int64_t expanded = 0;
    for (const EdgeLabel& e : g.edges()) {
      const std::int64_t du = g.degree(e.u), dv = g.degree(e.v);
      expanded += du * du * dv + du * dv * dv;
    }
    CHECK(x.rezg3 == expanded);
  }
}

TEST_CASE("adding an edge strictly increases M1 and F") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = make_random_gnm(7, 9, seed);
    // find the first non-edge and add it
    Graph bigger = g;
    bool added = false;
    for (int u = 0; u < 7 && !added; ++u) {
      for (int v = u + 1; v < 7 && !added; ++v) {
        if (!g.adjacent(u, v)) {
          auto edges = g.edges();
          std::vector<std::pair<int, int>> raw;
          for (const EdgeLabel& e : edges) raw.emplace_back(e.u, e.v);
          raw.emplace_back(u, v);
          bigger = Graph::from_edge_list(7, raw);
          added = true;
        }
      }
    }
    REQUIRE(added);
    const IndexSet before = index_set(g);
    const IndexSet after = index_set(bigger);
    CHECK(after.M1 > before.M1);
    CHECK(after.F > before.F);
  }
}

TEST_CASE("the size guard rejects n+m beyond the cap") {
  const Graph big = Graph::from_edge_list(kMaxIndexableSize + 1, {});
  CHECK_THROWS_AS(index_set(big), std::overflow_error);
  CHECK_THROWS_AS(edge_form_check(big), std::overflow_error);

  const Graph just_fits = Graph::from_edge_list(kMaxIndexableSize, {});
  CHECK(index_set(just_fits).n == kMaxIndexableSize);
}
