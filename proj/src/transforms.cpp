#include "xform/transforms.hpp"

#include <array>
#include <cassert>
#include <stdexcept>
#include <string>

namespace xform {

namespace {

constexpr std::array<TransformKind, 10> kAllKinds = {
    TransformKind::t1,  TransformKind::t2,  TransformKind::ppp, TransformKind::mmm,
    TransformKind::ppm, TransformKind::mmp, TransformKind::mpp, TransformKind::pmm,
    TransformKind::pmp, TransformKind::mpm,
};

constexpr std::array<TransformKind, 8> kXyzKinds = {
    TransformKind::ppp, TransformKind::mmm, TransformKind::ppm, TransformKind::mmp,
    TransformKind::mpp, TransformKind::pmm, TransformKind::pmp, TransformKind::mpm,
};

constexpr std::array<std::string_view, 10> kKindNames = {
    "t1", "t2", "+++", "---", "++-", "--+", "-++", "+--", "+-+", "-+-",
};

// How one of the three pair classes reacts to its predicate (adjacency,
// shared endpoint, or incidence).
enum class PairRule { never, when_positive, when_negative };

struct Rules {
  PairRule vv, ee, ve;
};

struct Signs {
  bool x, y, z;  // true means '+'
};

Signs signs_of(TransformKind k) {
  switch (k) {
    case TransformKind::ppp: return {true, true, true};
    case TransformKind::mmm: return {false, false, false};
    case TransformKind::ppm: return {true, true, false};
    case TransformKind::mmp: return {false, false, true};
    case TransformKind::mpp: return {false, true, true};
    case TransformKind::pmm: return {true, false, false};
    case TransformKind::pmp: return {true, false, true};
    case TransformKind::mpm: return {false, true, false};
    default: throw std::logic_error("signs_of: kind has no sign triple");
  }
}

Rules rules_of(TransformKind k) {
  if (k == TransformKind::t1)
    return {PairRule::when_positive, PairRule::never, PairRule::when_positive};
  if (k == TransformKind::t2)
    return {PairRule::never, PairRule::when_positive, PairRule::when_positive};
  const Signs s = signs_of(k);
  const auto rule = [](bool plus) {
    return plus ? PairRule::when_positive : PairRule::when_negative;
  };
  return {rule(s.x), rule(s.y), rule(s.z)};
}

bool applies(PairRule r, bool positive) {
  switch (r) {
    case PairRule::never: return false;
    case PairRule::when_positive: return positive;
    case PairRule::when_negative: return !positive;
  }
  return false;
}

bool share_endpoint(const EdgeLabel& a, const EdgeLabel& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

bool incident(int v, const EdgeLabel& e) { return v == e.u || v == e.v; }

}  // namespace

std::span<const TransformKind> all_transform_kinds() { return kAllKinds; }

std::span<const TransformKind> xyz_kinds() { return kXyzKinds; }

bool is_xyz(TransformKind k) { return k != TransformKind::t1 && k != TransformKind::t2; }

TransformKind opposite(TransformKind k) {
  switch (k) {
    case TransformKind::ppp: return TransformKind::mmm;
    case TransformKind::mmm: return TransformKind::ppp;
    case TransformKind::ppm: return TransformKind::mmp;
    case TransformKind::mmp: return TransformKind::ppm;
    case TransformKind::mpp: return TransformKind::pmm;
    case TransformKind::pmm: return TransformKind::mpp;
    case TransformKind::pmp: return TransformKind::mpm;
    case TransformKind::mpm: return TransformKind::pmp;
    default: throw std::invalid_argument("opposite() is defined for sign triples only");
  }
}

std::string_view kind_name(TransformKind k) {
  return kKindNames[static_cast<std::size_t>(k)];
}

std::optional<TransformKind> parse_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return kAllKinds[i];
  return std::nullopt;
}

Graph transform(const Graph& g, TransformKind kind) {
  const Rules rules = rules_of(kind);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto& ge = g.edges();
  std::vector<std::pair<int, int>> out;

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (applies(rules.vv, g.adjacent(u, v))) out.emplace_back(u, v);

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (applies(rules.ee, share_endpoint(ge[i], ge[j]))) out.emplace_back(n + i, n + j);

  for (int u = 0; u < n; ++u)
    for (int k = 0; k < m; ++k)
      if (applies(rules.ve, incident(u, ge[k]))) out.emplace_back(u, n + k);

  return Graph::from_edge_list(n + m, out);
}

DegreePrediction predicted_degrees(const Graph& g, TransformKind kind) {
  const std::int64_t n = g.vertex_count();
  const std::int64_t m = g.edge_count();
  DegreePrediction p;
  p.vertex_degree.reserve(static_cast<std::size_t>(n));
  p.edge_degree.reserve(static_cast<std::size_t>(m));

  for (int u = 0; u < n; ++u) {
    const std::int64_t d = g.degree(u);
    std::int64_t value = 0;
    switch (kind) {
      case TransformKind::t1: value = 2 * d; break;
      case TransformKind::t2: value = d; break;  // only the d incident edges
      case TransformKind::ppp: value = 2 * d; break;
      case TransformKind::mmm: value = m + n - 1 - 2 * d; break;
      case TransformKind::ppm: value = m; break;
      case TransformKind::mmp: value = n - 1; break;
      case TransformKind::mpp: value = n - 1; break;
      case TransformKind::pmm: value = m; break;
      case TransformKind::pmp: value = 2 * d; break;
      case TransformKind::mpm: value = m + n - 1 - 2 * d; break;
    }
    assert(value >= 0 && value <= n + m - 1);
    p.vertex_degree.push_back(value);
  }

  for (const EdgeLabel& e : g.edges()) {
    const std::int64_t s = static_cast<std::int64_t>(g.degree(e.u)) + g.degree(e.v);
    std::int64_t value = 0;
    switch (kind) {
      case TransformKind::t1: value = 2; break;
      case TransformKind::t2: value = s; break;
      case TransformKind::ppp: value = s; break;
      case TransformKind::mmm: value = m + n - 1 - s; break;
      // s >= 2 whenever an edge exists, so this stays >= 0 even for n < 4
      case TransformKind::ppm: value = s + n - 4; break;
      case TransformKind::mmp: value = m + 3 - s; break;
      case TransformKind::mpp: value = s; break;
      case TransformKind::pmm: value = m + n - 1 - s; break;
      case TransformKind::pmp: value = m + 3 - s; break;
      case TransformKind::mpm: value = s + n - 4; break;
    }
    assert(value >= 0 && value <= n + m - 1);
    p.edge_degree.push_back(value);
  }
  return p;
}

bool verify_complement_pairing(const Graph& g) {
  for (TransformKind k : {TransformKind::ppp, TransformKind::ppm, TransformKind::mpp,
                          TransformKind::pmp}) {
    if (!graphs_equal(transform(g, opposite(k)), complement(transform(g, k)))) return false;
  }
  return true;
}

}  // namespace xform
