#ifndef XFORM_VERIFY_HPP
#define XFORM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xform/formulas.hpp"
#include "xform/generators.hpp"
#include "xform/graph.hpp"
#include "xform/transforms.hpp"

namespace xform {

// F-index of transform(g, kind) obtained by construction and degree cubing
// alone; never consults the closed forms.
std::int64_t oracle_f(const Graph& g, TransformKind kind);

struct FormulaCheck {
  std::optional<std::int64_t> formula_value;
  std::optional<std::int64_t> oracle_value;
  bool match = false;
  std::string error;  // nonempty when either side failed to evaluate
};

// One graph's full scorecard: the 11 F-identities, the 8 aux identities,
// the degree-rule check over all ten kinds, and complement pairing.
struct VerificationReport {
  std::string graph_id;  // graph6
  std::vector<std::pair<FormulaId, FormulaCheck>> per_formula;
  bool degree_rule_match = false;
  bool complement_pairing_match = false;
  bool passed() const;
};

VerificationReport verify_graph(const Graph& g);

struct FamilyRange {
  Family family = Family::path;
  int n_lo = 0;
  int n_hi = 0;
};

// Exhaustive enumeration blows up as 2^(n(n-1)/2); cap it at desk scale.
inline constexpr int kMaxExhaustiveN = 7;

struct CorpusSpec {
  enum class Mode { exhaustive, families, random };
  Mode mode = Mode::exhaustive;
  int exhaustive_max_n = 0;  // exhaustive: all labeled graphs, 1 <= n <= max
  std::vector<FamilyRange> families;
  int random_count = 0;  // random: seeded G(n, m) draws
  int random_n_min = 0;
  int random_n_max = 0;
  std::uint64_t seed = 0;
  bool dedupe = false;  // drop graph6-identical repeats, keeping the first
};

// Throws std::invalid_argument on an out-of-range or empty spec.
std::vector<Graph> materialize_corpus(const CorpusSpec& spec);
nlohmann::ordered_json corpus_spec_json(const CorpusSpec& spec);

struct CorpusReport {
  nlohmann::ordered_json spec;
  std::int64_t total = 0;
  std::vector<VerificationReport> failures;  // graph6-lexicographic
  std::int64_t elapsed_ms = 0;
  bool all_passed() const { return failures.empty(); }
};

// Parallel harness (OpenMP when available); threads <= 0 takes the runtime
// default. Report contents are independent of the thread count.
CorpusReport verify_corpus(const CorpusSpec& spec, int threads = 0);
CorpusReport verify_graphs(const std::vector<Graph>& graphs,
                           nlohmann::ordered_json spec, int threads = 0);

// Plain-loop reference implementations used to cross-check the parallel
// harness; they must produce byte-identical reports.
CorpusReport verify_corpus_serial(const CorpusSpec& spec);
CorpusReport verify_graphs_serial(const std::vector<Graph>& graphs,
                                  nlohmann::ordered_json spec);

// include_timing fills elapsed_ms; the default prints it as 0 so identical
// runs stay byte-identical.
nlohmann::ordered_json report_json(const CorpusReport& report, bool include_timing = false);
std::string report_csv(const CorpusReport& report);
std::string report_text(const CorpusReport& report, bool include_timing = false);

}  // namespace xform

#endif
