#include "xform/formulas.hpp"

#include <array>
#include <cassert>
#include <stdexcept>
#include <string>

#include "xform/arith.hpp"

namespace xform {

namespace {

constexpr std::array<FormulaId, 19> kAllIds = {
    FormulaId::prop1,     FormulaId::thm2_t1,   FormulaId::thm2_t2,  FormulaId::thm3_ppp,
    FormulaId::thm4_mmm,  FormulaId::thm5_ppm,  FormulaId::thm6_mmp, FormulaId::thm7_mpp,
    FormulaId::thm8_pmm,  FormulaId::thm9_pmp,  FormulaId::thm10_mpm,
    FormulaId::aux_e_ppp, FormulaId::aux_e_ppm, FormulaId::aux_e_mpp, FormulaId::aux_e_pmp,
    FormulaId::aux_m1_ppp, FormulaId::aux_m1_ppm, FormulaId::aux_m1_mpp, FormulaId::aux_m1_pmp,
};

constexpr std::array<std::string_view, 19> kIdNames = {
    "prop1",      "thm2-t1",    "thm2-t2",   "thm3",       "thm4",
    "thm5",       "thm6",       "thm7",      "thm8",       "thm9",
    "thm10",      "aux-e-+++",  "aux-e-++-", "aux-e--++",  "aux-e-+-+",
    "aux-m1-+++", "aux-m1-++-", "aux-m1--++", "aux-m1-+-+",
};

}  // namespace

std::span<const FormulaId> all_formula_ids() { return kAllIds; }

std::string_view formula_name(FormulaId id) {
  return kIdNames[static_cast<std::size_t>(id)];
}

std::int64_t f_formula(const IndexSet& x, TransformKind kind) {
  const int128 n = x.n, m = x.m, M1 = x.M1, M2 = x.M2, F = x.F, xi4 = x.xi4, R = x.rezg3;
  const int128 s = n + m;  // order of the transform
  int128 value = 0;
  switch (kind) {
    case TransformKind::t1:
      value = 8 * F + 8 * m;
      break;
    case TransformKind::t2:
      value = F + xi4 + 3 * R;
      break;
    case TransformKind::ppp:
      value = 8 * F + xi4 + 3 * R;
      break;
    case TransformKind::mmm:
      value = (3 * m + 3 * n - 11) * F - 3 * (s - 1) * (s - 5) * M1 + 6 * (s - 1) * M2 -
              xi4 - 3 * R + s * cube(s - 1) - 12 * m * sq(s - 1);
      break;
    case TransformKind::ppm:
      value = 3 * (n - 4) * F + 3 * sq(n - 4) * M1 + 6 * (n - 4) * M2 + xi4 + 3 * R +
              n * cube(m) + m * cube(n - 4);
      break;
    case TransformKind::mmp:
      value = 3 * (m + 3) * F - 3 * sq(m + 3) * M1 + 6 * (m + 3) * M2 - xi4 - 3 * R +
              n * cube(n - 1) + m * cube(m + 3);
      break;
    case TransformKind::mpp:
      value = n * cube(n - 1) + xi4 + 3 * R;
      break;
    case TransformKind::pmm:
      value = 3 * (s - 1) * F - xi4 - 3 * R - 3 * sq(s - 1) * M1 + 6 * (s - 1) * M2 +
              m * cube(s - 1) + n * cube(m);
      break;
    case TransformKind::pmp:
      value = (3 * m + 17) * F - 3 * sq(m + 3) * M1 + 6 * (m + 3) * M2 - xi4 - 3 * R +
              m * cube(m + 3);
      break;
    case TransformKind::mpm:
      value = (3 * n - 20) * F + (3 * n * n - 12 * n + 12 * m + 36) * M1 +
              6 * (n - 4) * M2 + xi4 + 3 * R + sq(s - 1) * (n * (s - 1) - 12 * m) +
              m * cube(n - 4);
      break;
  }
  return narrow_to_i64(value);
}

std::int64_t f_complement_formula(const IndexSet& x) {
  const int128 n = x.n, m = x.m;
  const int128 mbar = n * (n - 1) / 2 - m;
  return narrow_to_i64(2 * sq(n - 1) * (mbar - 2 * m) + 3 * (n - 1) * int128(x.M1) - x.F);
}

std::int64_t aux_edge_count_formula(const IndexSet& x, TransformKind kind) {
  const int128 n = x.n, m = x.m, M1 = x.M1;
  int128 twice = 0;
  switch (kind) {
    case TransformKind::ppp: twice = 4 * m + M1; break;
    case TransformKind::ppm: twice = 2 * m * (n - 2) + M1; break;
    case TransformKind::mpp: twice = n * (n - 1) + M1; break;
    case TransformKind::pmp: twice = m * (m + 7) - M1; break;
    default:
      throw std::invalid_argument("no edge-count closed form for kind " +
                                  std::string(kind_name(kind)));
  }
  assert(twice % 2 == 0);  // degree sums are even
  return narrow_to_i64(twice / 2);
}

std::int64_t aux_m1_formula(const IndexSet& x, TransformKind kind) {
  const int128 n = x.n, m = x.m, M1 = x.M1, M2 = x.M2, F = x.F;
  int128 value = 0;
  switch (kind) {
    case TransformKind::ppp:
      value = 4 * M1 + 2 * M2 + F;
      break;
    case TransformKind::ppm:
      value = m * n * (m + n - 8) + 16 * m + 2 * (n - 4) * M1 + 2 * M2 + F;
      break;
    case TransformKind::mpp:
      value = n * sq(n - 1) + 2 * M2 + F;
      break;
    case TransformKind::pmp:
      value = m * sq(m + 3) - 2 * (m + 1) * M1 + 2 * M2 + F;
      break;
    default:
      throw std::invalid_argument("no M1 closed form for kind " +
                                  std::string(kind_name(kind)));
  }
  return narrow_to_i64(value);
}

}  // namespace xform
