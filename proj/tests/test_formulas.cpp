#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "xform/formulas.hpp"
#include "xform/generators.hpp"
#include "xform/indices.hpp"
#include "xform/transforms.hpp"
#include "xform/verify.hpp"

using namespace xform;

namespace {

std::int64_t constructed_f(const Graph& g, TransformKind k) {
  return index_set(transform(g, k)).F;
}

std::vector<Graph> formula_corpus() {
  CorpusSpec spec;
  spec.mode = CorpusSpec::Mode::exhaustive;
  spec.exhaustive_max_n = 4;
  std::vector<Graph> graphs = materialize_corpus(spec);
  for (int n = 3; n <= 9; ++n) {
    graphs.push_back(make_path(n));
    graphs.push_back(make_cycle(n));
    graphs.push_back(make_star(n));
  }
  graphs.push_back(make_complete(6));
  graphs.push_back(make_complete_bipartite(3, 3));
  for (std::uint64_t seed = 11; seed <= 18; ++seed)
    graphs.push_back(make_random_gnm(8, static_cast<std::int64_t>(3 * (seed - 10)), seed));
  return graphs;
}

}  // namespace

TEST_CASE("hand-checked forgotten index values, formula and construction") {
  struct Row {
    Graph g;
    TransformKind kind;
    std::int64_t expected;
  };
  const std::vector<Row> rows = {
      {make_cycle(4), TransformKind::t1, 288},
      {make_cycle(4), TransformKind::t2, 288},
      {make_cycle(4), TransformKind::ppp, 512},
      {make_cycle(4), TransformKind::mmm, 216},
      {make_star(4), TransformKind::mpp, 300},
      {make_complete(3), TransformKind::mpm, 84},
      {make_path(4), TransformKind::pmm, 170},
      {make_path(3), TransformKind::ppm, 40},
  };
  for (const Row& row : rows) {
    CAPTURE(kind_name(row.kind));
    CHECK(f_formula(index_set(row.g), row.kind) == row.expected);
    CHECK(constructed_f(row.g, row.kind) == row.expected);
  }
}

TEST_CASE("hand-checked complement values") {
  CHECK(f_complement_formula(index_set(make_cycle(5))) == 40);
  CHECK(index_set(complement(make_cycle(5))).F == 40);
  CHECK(f_complement_formula(index_set(make_complete(4))) == 0);
  CHECK(f_complement_formula(index_set(make_star(4))) == 24);
  CHECK(index_set(complement(make_star(4))).F == 24);
}

TEST_CASE("hand-checked transform edge counts") {
  CHECK(aux_edge_count_formula(index_set(make_cycle(4)), TransformKind::ppp) == 16);
  CHECK(transform(make_cycle(4), TransformKind::ppp).edge_count() == 16);
  CHECK(aux_edge_count_formula(index_set(make_star(4)), TransformKind::mpp) == 12);
  CHECK(transform(make_star(4), TransformKind::mpp).edge_count() == 12);
  CHECK(aux_edge_count_formula(index_set(make_cycle(4)), TransformKind::pmp) == 14);
  CHECK(transform(make_cycle(4), TransformKind::pmp).edge_count() == 14);
}

TEST_CASE("hand-checked transform first Zagreb values") {
  CHECK(aux_m1_formula(index_set(make_cycle(4)), TransformKind::ppp) == 128);
  CHECK(index_set(transform(make_cycle(4), TransformKind::ppp)).M1 == 128);
  CHECK(aux_m1_formula(index_set(make_cycle(4)), TransformKind::ppm) == 128);
  CHECK(index_set(transform(make_cycle(4), TransformKind::ppm)).M1 == 128);
  CHECK(aux_m1_formula(index_set(make_cycle(4)), TransformKind::pmp) == 100);
  CHECK(index_set(transform(make_cycle(4), TransformKind::pmp)).M1 == 100);
  CHECK(aux_m1_formula(index_set(make_complete(3)), TransformKind::mpp) == 60);
  CHECK(index_set(transform(make_complete(3), TransformKind::mpp)).M1 == 60);
}

TEST_CASE("the one-vertex graph maps to zero under every kind") {
  const IndexSet x = index_set(Graph::from_edge_list(1, {}));
  for (TransformKind k : all_transform_kinds()) CHECK(f_formula(x, k) == 0);
  CHECK(f_complement_formula(x) == 0);
}

TEST_CASE("closed forms agree with construction across a corpus") {
  for (const Graph& g : formula_corpus()) {
    const IndexSet x = index_set(g);
    for (TransformKind k : all_transform_kinds()) {
      CAPTURE(kind_name(k));
      CHECK(f_formula(x, k) == constructed_f(g, k));
    }
    CHECK(f_complement_formula(x) == index_set(complement(g)).F);
  }
}

TEST_CASE("auxiliary identities agree with construction across a corpus") {
  const TransformKind kinds[] = {TransformKind::ppp, TransformKind::ppm,
                                 TransformKind::mpp, TransformKind::pmp};
  for (const Graph& g : formula_corpus()) {
    const IndexSet x = index_set(g);
    for (TransformKind k : kinds) {
      CAPTURE(kind_name(k));
      const Graph t = transform(g, k);
      CHECK(aux_edge_count_formula(x, k) == t.edge_count());
      CHECK(aux_m1_formula(x, k) == index_set(t).M1);
    }
  }
}

TEST_CASE("complement route matches the opposite kind's formula") {
  for (const Graph& g : formula_corpus()) {
    const IndexSet x = index_set(g);
    for (TransformKind k : xyz_kinds()) {
      CAPTURE(kind_name(k));
      const IndexSet tx = index_set(transform(g, k));
      CHECK(f_formula(x, opposite(k)) == f_complement_formula(tx));
    }
  }
}

TEST_CASE("auxiliary formulas reject unsupported kinds") {
  const IndexSet x = index_set(make_cycle(4));
  CHECK_THROWS_AS(aux_edge_count_formula(x, TransformKind::mmm), std::invalid_argument);
  CHECK_THROWS_AS(aux_edge_count_formula(x, TransformKind::t1), std::invalid_argument);
  CHECK_THROWS_AS(aux_m1_formula(x, TransformKind::mpm), std::invalid_argument);
  CHECK_THROWS_AS(aux_m1_formula(x, TransformKind::t2), std::invalid_argument);
}

TEST_CASE("regular-graph scale law for the semitotal point graph") {
  struct Row {
    Graph g;
    std::int64_t k;
  };
  const std::vector<Row> rows = {{make_cycle(7), 2},
                                 {make_complete(6), 5},
                                 {make_complete_bipartite(3, 3), 3}};
  for (const Row& row : rows) {
    const IndexSet x = index_set(row.g);
    CHECK(f_formula(x, TransformKind::t1) ==
          8 * x.n * row.k * row.k * row.k + 8 * x.m);
  }
}

TEST_CASE("formula identifiers render stable names") {
  CHECK(formula_name(FormulaId::prop1) == std::string("prop1"));
  CHECK(formula_name(FormulaId::thm2_t1) == std::string("thm2-t1"));
  CHECK(formula_name(FormulaId::thm2_t2) == std::string("thm2-t2"));
  CHECK(formula_name(FormulaId::thm3_ppp) == std::string("thm3"));
  CHECK(formula_name(FormulaId::thm10_mpm) == std::string("thm10"));
  CHECK(formula_name(FormulaId::aux_e_ppp) == std::string("aux-e-+++"));
  CHECK(formula_name(FormulaId::aux_m1_pmp) == std::string("aux-m1-+-+"));
  CHECK(all_formula_ids().size() == 19);
}
