#ifndef XFORM_TRANSFORMS_HPP
#define XFORM_TRANSFORMS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "xform/graph.hpp"

namespace xform {

// The two semitotal graphs plus the eight sign-triple transformations. All
// ten act on V(g) united with E(g): output vertices 0..n-1 are g's
// vertices, n+k is g's k-th edge in EdgeLabel order. For a sign triple xyz,
//   x: two original vertices are joined iff they are adjacent (+) or
//      non-adjacent (-) in g;
//   y: two edge-vertices are joined iff the edges share an endpoint (+) or
//      do not (-);
//   z: an original vertex and an edge-vertex are joined iff incident (+) or
//      non-incident (-).
enum class TransformKind {
  t1,   // semitotal point graph: adjacency + incidence
  t2,   // semitotal line graph: edge adjacency + incidence
  ppp,  // +++
  mmm,  // ---
  ppm,  // ++-
  mmp,  // --+
  mpp,  // -++
  pmm,  // +--
  pmp,  // +-+
  mpm,  // -+-
};

std::span<const TransformKind> all_transform_kinds();  // all ten
std::span<const TransformKind> xyz_kinds();            // the eight triples
bool is_xyz(TransformKind k);

// Flips all three signs. Throws std::invalid_argument for t1/t2.
TransformKind opposite(TransformKind k);

std::string_view kind_name(TransformKind k);  // "t1", "t2", "+++", ...
std::optional<TransformKind> parse_kind(std::string_view name);

// Closed-form degree of every transform vertex, aligned with vertex ids
// (vertex_degree[u] for u, edge_degree[k] for edge-vertex n+k).
struct DegreePrediction {
  std::vector<std::int64_t> vertex_degree;
  std::vector<std::int64_t> edge_degree;
};

Graph transform(const Graph& g, TransformKind kind);
DegreePrediction predicted_degrees(const Graph& g, TransformKind kind);

// True iff for every sign triple k, transform(g, opposite(k)) is
// labeled-equal to complement(transform(g, k)).
bool verify_complement_pairing(const Graph& g);

}  // namespace xform

#endif
