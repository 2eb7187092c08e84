#ifndef XFORM_ARITH_HPP
#define XFORM_ARITH_HPP

#include <cstdint>
#include <stdexcept>

namespace xform {

// Index and formula evaluation runs on signed 128-bit intermediates; every
// value handed back to callers must fit in 64 bits, and narrowing checks
// that instead of wrapping.
using int128 = __int128;

inline std::int64_t narrow_to_i64(int128 v) {
  if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
    throw std::overflow_error("value exceeds the 64-bit integer range");
  return static_cast<std::int64_t>(v);
}

inline int128 sq(int128 v) { return v * v; }
inline int128 cube(int128 v) { return v * v * v; }

}  // namespace xform

#endif
