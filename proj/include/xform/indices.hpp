#ifndef XFORM_INDICES_HPP
#define XFORM_INDICES_HPP

#include <cstdint>

#include "xform/graph.hpp"

namespace xform {

// The degree-sum invariants every closed form consumes.
struct IndexSet {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t M1 = 0;     // sum of squared degrees
  std::int64_t M2 = 0;     // sum over edges of d(u)*d(v)
  std::int64_t F = 0;      // sum of cubed degrees
  std::int64_t xi4 = 0;    // sum of fourth powers of degrees
  std::int64_t rezg3 = 0;  // sum over edges of d(u)*d(v)*(d(u)+d(v))
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

// Largest n+m accepted by index and formula evaluation. The worst formula
// intermediate is a small multiple of (n+m)^4, so this cap keeps everything
// orders of magnitude inside the 64-bit range.
inline constexpr int kMaxIndexableSize = 10000;

// All seven invariants in exact integer arithmetic. M1, F and xi4 use the
// vertex-sum definitions; M2 and rezg3 the edge-sum ones. Throws
// std::overflow_error when n+m exceeds kMaxIndexableSize or a value leaves
// the 64-bit range.
IndexSet index_set(const Graph& g);

// True iff the edge-sum forms of M1, F and xi4 agree with their vertex-sum
// forms on g.
bool edge_form_check(const Graph& g);

}  // namespace xform

#endif
