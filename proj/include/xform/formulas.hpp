#ifndef XFORM_FORMULAS_HPP
#define XFORM_FORMULAS_HPP

#include <cstdint>
#include <span>
#include <string_view>

#include "xform/indices.hpp"
#include "xform/transforms.hpp"

namespace xform {

// Every closed form the verifier checks. Each F-identity targets one
// transform kind; the aux identities give |E| and M1 of the four kinds that
// admit a closed form.
enum class FormulaId {
  prop1,  // F of the complement graph
  thm2_t1,
  thm2_t2,
  thm3_ppp,
  thm4_mmm,
  thm5_ppm,
  thm6_mmp,
  thm7_mpp,
  thm8_pmm,
  thm9_pmp,
  thm10_mpm,
  aux_e_ppp,
  aux_e_ppm,
  aux_e_mpp,
  aux_e_pmp,
  aux_m1_ppp,
  aux_m1_ppm,
  aux_m1_mpp,
  aux_m1_pmp,
};

std::span<const FormulaId> all_formula_ids();  // report order
std::string_view formula_name(FormulaId id);   // "prop1", "thm2-t1", "aux-e-+++", ...

// Closed-form F-index of transform(g, kind) for a graph with invariants
// idx. Consumes the IndexSet only; never touches a graph.
std::int64_t f_formula(const IndexSet& idx, TransformKind kind);

// Closed-form F-index of the complement graph.
std::int64_t f_complement_formula(const IndexSet& idx);

// Closed-form |E(transform)| for kinds +++, ++-, -++, +-+. Throws
// std::invalid_argument for any other kind.
std::int64_t aux_edge_count_formula(const IndexSet& idx, TransformKind kind);

// Closed-form M1(transform) for the same four kinds.
std::int64_t aux_m1_formula(const IndexSet& idx, TransformKind kind);

}  // namespace xform

#endif
