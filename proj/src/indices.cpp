#include "xform/indices.hpp"

#include <stdexcept>
#include <string>

#include "xform/arith.hpp"

namespace xform {

namespace {

void check_size_guard(const Graph& g) {
  const std::int64_t total = static_cast<std::int64_t>(g.vertex_count()) + g.edge_count();
  if (total > kMaxIndexableSize)
    throw std::overflow_error("n + m = " + std::to_string(total) +
                              " exceeds the exact-arithmetic guard (" +
                              std::to_string(kMaxIndexableSize) + ")");
}

}  // namespace

IndexSet index_set(const Graph& g) {
  check_size_guard(g);
  IndexSet x;
  x.n = g.vertex_count();
  x.m = g.edge_count();
  int128 m1 = 0, f = 0, xi = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int128 d = g.degree(v);
    m1 += d * d;
    f += d * d * d;
    xi += d * d * d * d;
  }
  int128 m2 = 0, r = 0;
  for (const EdgeLabel& e : g.edges()) {
    const int128 du = g.degree(e.u);
    const int128 dv = g.degree(e.v);
    m2 += du * dv;
    r += du * dv * (du + dv);
  }
  x.M1 = narrow_to_i64(m1);
  x.M2 = narrow_to_i64(m2);
  x.F = narrow_to_i64(f);
  x.xi4 = narrow_to_i64(xi);
  x.rezg3 = narrow_to_i64(r);
  return x;
}

bool edge_form_check(const Graph& g) {
  check_size_guard(g);
  int128 m1_v = 0, f_v = 0, xi_v = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int128 d = g.degree(v);
    m1_v += d * d;
    f_v += d * d * d;
    xi_v += d * d * d * d;
  }
  int128 m1_e = 0, f_e = 0, xi_e = 0;
  for (const EdgeLabel& e : g.edges()) {
    const int128 du = g.degree(e.u);
    const int128 dv = g.degree(e.v);
    m1_e += du + dv;
    f_e += du * du + dv * dv;
    xi_e += du * du * du + dv * dv * dv;
  }
  return m1_v == m1_e && f_v == f_e && xi_v == xi_e;
}

}  // namespace xform
