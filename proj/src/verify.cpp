#include "xform/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "xform/arith.hpp"
#include "xform/graph6.hpp"
#include "xform/indices.hpp"

namespace xform {

namespace {

std::int64_t degree_cube_sum(const Graph& g) {
  int128 total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += cube(int128(g.degree(v)));
  return narrow_to_i64(total);
}

std::int64_t degree_square_sum(const Graph& g) {
  int128 total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += sq(int128(g.degree(v)));
  return narrow_to_i64(total);
}

constexpr std::array<std::pair<FormulaId, TransformKind>, 10> kFKinds = {{
    {FormulaId::thm2_t1, TransformKind::t1},
    {FormulaId::thm2_t2, TransformKind::t2},
    {FormulaId::thm3_ppp, TransformKind::ppp},
    {FormulaId::thm4_mmm, TransformKind::mmm},
    {FormulaId::thm5_ppm, TransformKind::ppm},
    {FormulaId::thm6_mmp, TransformKind::mmp},
    {FormulaId::thm7_mpp, TransformKind::mpp},
    {FormulaId::thm8_pmm, TransformKind::pmm},
    {FormulaId::thm9_pmp, TransformKind::pmp},
    {FormulaId::thm10_mpm, TransformKind::mpm},
}};

constexpr std::array<std::pair<FormulaId, TransformKind>, 4> kAuxEdgeIds = {{
    {FormulaId::aux_e_ppp, TransformKind::ppp},
    {FormulaId::aux_e_ppm, TransformKind::ppm},
    {FormulaId::aux_e_mpp, TransformKind::mpp},
    {FormulaId::aux_e_pmp, TransformKind::pmp},
}};

constexpr std::array<std::pair<FormulaId, TransformKind>, 4> kAuxM1Ids = {{
    {FormulaId::aux_m1_ppp, TransformKind::ppp},
    {FormulaId::aux_m1_ppm, TransformKind::ppm},
    {FormulaId::aux_m1_mpp, TransformKind::mpp},
    {FormulaId::aux_m1_pmp, TransformKind::pmp},
}};

}  // namespace

std::int64_t oracle_f(const Graph& g, TransformKind kind) {
  return degree_cube_sum(transform(g, kind));
}

bool VerificationReport::passed() const {
  if (!degree_rule_match || !complement_pairing_match) return false;
  for (const auto& [id, check] : per_formula)
    if (!check.match) return false;
  return true;
}

VerificationReport verify_graph(const Graph& g) {
  VerificationReport rep;
  rep.graph_id = to_graph6(g);

  std::optional<IndexSet> idx;
  std::string idx_error;
  try {
    idx = index_set(g);
  } catch (const std::exception& e) {
    idx_error = e.what();
  }

  // Nothing downstream can succeed without the invariants, so skip the
  // expensive constructions and record the guard error on every entry.
  if (!idx) {
    for (FormulaId id : all_formula_ids()) {
      FormulaCheck check;
      check.error = idx_error;
      rep.per_formula.emplace_back(id, std::move(check));
    }
    return rep;
  }

  // Build each transform once; every check below shares them. The enum
  // value doubles as the index into all_transform_kinds().
  std::array<std::optional<Graph>, 10> built;
  std::array<std::string, 10> build_error;
  for (TransformKind k : all_transform_kinds()) {
    const auto slot = static_cast<std::size_t>(k);
    try {
      built[slot].emplace(transform(g, k));
    } catch (const std::exception& e) {
      build_error[slot] = e.what();
    }
  }
  const auto built_of = [&](TransformKind k) -> const Graph& {
    const auto slot = static_cast<std::size_t>(k);
    if (!built[slot]) throw std::runtime_error(build_error[slot]);
    return *built[slot];
  };

  const auto add = [&rep](FormulaId id, auto&& formula_fn, auto&& oracle_fn) {
    FormulaCheck check;
    try {
      check.formula_value = formula_fn();
    } catch (const std::exception& e) {
      check.error = e.what();
    }
    try {
      check.oracle_value = oracle_fn();
    } catch (const std::exception& e) {
      if (!check.error.empty()) check.error += "; ";
      check.error += e.what();
    }
    check.match = check.error.empty() && check.formula_value && check.oracle_value &&
                  *check.formula_value == *check.oracle_value;
    rep.per_formula.emplace_back(id, std::move(check));
  };

  add(
      FormulaId::prop1, [&] { return f_complement_formula(*idx); },
      [&] { return degree_cube_sum(complement(g)); });

  for (const auto& [id, kind] : kFKinds) {
    const TransformKind k = kind;
    add(
        id, [&, k] { return f_formula(*idx, k); },
        [&, k] { return degree_cube_sum(built_of(k)); });
  }
  for (const auto& [id, kind] : kAuxEdgeIds) {
    const TransformKind k = kind;
    add(
        id, [&, k] { return aux_edge_count_formula(*idx, k); },
        [&, k] { return static_cast<std::int64_t>(built_of(k).edge_count()); });
  }
  for (const auto& [id, kind] : kAuxM1Ids) {
    const TransformKind k = kind;
    add(
        id, [&, k] { return aux_m1_formula(*idx, k); },
        [&, k] { return degree_square_sum(built_of(k)); });
  }

  rep.degree_rule_match = [&] {
    try {
      const int n = g.vertex_count();
      const int m = g.edge_count();
      for (TransformKind k : all_transform_kinds()) {
        const Graph& t = built_of(k);
        const DegreePrediction p = predicted_degrees(g, k);
        for (int v = 0; v < n; ++v)
          if (t.degree(v) != p.vertex_degree[v]) return false;
        for (int e = 0; e < m; ++e)
          if (t.degree(n + e) != p.edge_degree[e]) return false;
      }
      return true;
    } catch (...) {
      return false;
    }
  }();

  rep.complement_pairing_match = [&] {
    try {
      for (TransformKind k : {TransformKind::ppp, TransformKind::ppm, TransformKind::mpp,
                              TransformKind::pmp}) {
        if (!graphs_equal(built_of(opposite(k)), complement(built_of(k)))) return false;
      }
      return true;
    } catch (...) {
      return false;
    }
  }();

  return rep;
}

std::vector<Graph> materialize_corpus(const CorpusSpec& spec) {
  std::vector<Graph> graphs;
  switch (spec.mode) {
    case CorpusSpec::Mode::exhaustive: {
      if (spec.exhaustive_max_n < 1 || spec.exhaustive_max_n > kMaxExhaustiveN)
        throw std::invalid_argument("exhaustive max_n must lie in 1.." +
                                    std::to_string(kMaxExhaustiveN));
      for (int n = 1; n <= spec.exhaustive_max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const std::uint64_t count = std::uint64_t(1) << pairs.size();
        for (std::uint64_t mask = 0; mask < count; ++mask) {
          std::vector<std::pair<int, int>> edges;
          for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1) edges.push_back(pairs[b]);
          graphs.push_back(Graph::from_edge_list(n, edges));
        }
      }
      break;
    }
    case CorpusSpec::Mode::families: {
      if (spec.families.empty()) throw std::invalid_argument("families corpus is empty");
      for (const FamilyRange& fr : spec.families) {
        if (fr.n_lo > fr.n_hi)
          throw std::invalid_argument("family range has lo > hi for " +
                                      std::string(family_name(fr.family)));
        for (int n = fr.n_lo; n <= fr.n_hi; ++n) {
          switch (fr.family) {
            case Family::path: graphs.push_back(make_path(n)); break;
            case Family::cycle: graphs.push_back(make_cycle(n)); break;
            case Family::complete: graphs.push_back(make_complete(n)); break;
            case Family::star: graphs.push_back(make_star(n)); break;
            default:
              throw std::invalid_argument("family " + std::string(family_name(fr.family)) +
                                          " takes no n-range; use path, cycle, complete or star");
          }
        }
      }
      break;
    }
    case CorpusSpec::Mode::random: {
      if (spec.random_count < 1)
        throw std::invalid_argument("random corpus needs count >= 1");
      if (spec.random_n_min < 1 || spec.random_n_min > spec.random_n_max)
        throw std::invalid_argument("random corpus needs 1 <= n_min <= n_max");
      std::mt19937_64 master(spec.seed);
      const std::uint64_t span =
          std::uint64_t(spec.random_n_max - spec.random_n_min) + 1;
      for (int i = 0; i < spec.random_count; ++i) {
        const int n = spec.random_n_min + static_cast<int>(bounded_uniform(master, span));
        const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const std::int64_t m = static_cast<std::int64_t>(
            bounded_uniform(master, static_cast<std::uint64_t>(max_m) + 1));
        const std::uint64_t graph_seed = master();
        graphs.push_back(make_random_gnm(n, m, graph_seed));
      }
      break;
    }
  }
  if (spec.dedupe) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> unique;
    unique.reserve(graphs.size());
    for (Graph& g : graphs)
      if (seen.insert(to_graph6(g)).second) unique.push_back(std::move(g));
    graphs = std::move(unique);
  }
  return graphs;
}

nlohmann::ordered_json corpus_spec_json(const CorpusSpec& spec) {
  nlohmann::ordered_json j;
  switch (spec.mode) {
    case CorpusSpec::Mode::exhaustive:
      j["mode"] = "exhaustive";
      j["max_n"] = spec.exhaustive_max_n;
      break;
    case CorpusSpec::Mode::families: {
      j["mode"] = "families";
      nlohmann::ordered_json fams = nlohmann::ordered_json::array();
      for (const FamilyRange& fr : spec.families) {
        nlohmann::ordered_json f;
        f["family"] = std::string(family_name(fr.family));
        f["n_min"] = fr.n_lo;
        f["n_max"] = fr.n_hi;
        fams.push_back(std::move(f));
      }
      j["families"] = std::move(fams);
      break;
    }
    case CorpusSpec::Mode::random:
      j["mode"] = "random";
      j["count"] = spec.random_count;
      j["n_min"] = spec.random_n_min;
      j["n_max"] = spec.random_n_max;
      j["seed"] = spec.seed;
      break;
  }
  j["dedupe"] = spec.dedupe;
  return j;
}

namespace {

CorpusReport assemble(std::vector<VerificationReport> reports, nlohmann::ordered_json spec,
                      std::chrono::steady_clock::time_point t0) {
  CorpusReport out;
  out.spec = std::move(spec);
  out.total = static_cast<std::int64_t>(reports.size());
  for (VerificationReport& r : reports)
    if (!r.passed()) out.failures.push_back(std::move(r));
  std::stable_sort(out.failures.begin(), out.failures.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return a.graph_id < b.graph_id;
                   });
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return out;
}

VerificationReport safe_verify(const Graph& g) {
  try {
    return verify_graph(g);
  } catch (const std::exception& e) {
    // verify_graph records evaluation errors itself; this catches only
    // construction-of-report failures so the parallel loop never throws.
    VerificationReport rep;
    rep.graph_id = "?";
    FormulaCheck check;
    check.error = e.what();
    for (FormulaId id : all_formula_ids()) rep.per_formula.emplace_back(id, check);
    return rep;
  }
}

}  // namespace

CorpusReport verify_graphs(const std::vector<Graph>& graphs, nlohmann::ordered_json spec,
                           int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports(graphs.size());
#ifdef _OPENMP
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(graphs.size()); ++i)
    reports[i] = safe_verify(graphs[i]);
#else
  (void)threads;
  for (std::size_t i = 0; i < graphs.size(); ++i) reports[i] = safe_verify(graphs[i]);
#endif
  return assemble(std::move(reports), std::move(spec), t0);
}

CorpusReport verify_corpus(const CorpusSpec& spec, int threads) {
  return verify_graphs(materialize_corpus(spec), corpus_spec_json(spec), threads);
}

CorpusReport verify_graphs_serial(const std::vector<Graph>& graphs,
                                  nlohmann::ordered_json spec) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports;
  reports.reserve(graphs.size());
  for (const Graph& g : graphs) reports.push_back(safe_verify(g));
  return assemble(std::move(reports), std::move(spec), t0);
}

CorpusReport verify_corpus_serial(const CorpusSpec& spec) {
  return verify_graphs_serial(materialize_corpus(spec), corpus_spec_json(spec));
}

namespace {

nlohmann::ordered_json check_json(const FormulaCheck& check) {
  nlohmann::ordered_json j;
  if (check.formula_value)
    j["formula_value"] = *check.formula_value;
  else
    j["formula_value"] = nullptr;
  if (check.oracle_value)
    j["oracle_value"] = *check.oracle_value;
  else
    j["oracle_value"] = nullptr;
  j["match"] = check.match;
  if (!check.error.empty()) j["error"] = check.error;
  return j;
}

nlohmann::ordered_json report_entry_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["graph_id"] = rep.graph_id;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto& [id, check] : rep.per_formula)
    per[std::string(formula_name(id))] = check_json(check);
  j["per_formula"] = std::move(per);
  j["degree_rule_match"] = rep.degree_rule_match;
  j["complement_pairing_match"] = rep.complement_pairing_match;
  return j;
}

}  // namespace

nlohmann::ordered_json report_json(const CorpusReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["spec"] = report.spec;
  j["total"] = report.total;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const VerificationReport& r : report.failures) fails.push_back(report_entry_json(r));
  j["failures"] = std::move(fails);
  j["elapsed_ms"] = include_timing ? report.elapsed_ms : 0;
  return j;
}

std::string report_csv(const CorpusReport& report) {
  std::ostringstream out;
  out << "graph6,formula_id,formula_value,oracle_value,match\n";
  const auto cell = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const VerificationReport& r : report.failures) {
    for (const auto& [id, check] : r.per_formula)
      out << r.graph_id << ',' << formula_name(id) << ',' << cell(check.formula_value) << ','
          << cell(check.oracle_value) << ',' << (check.match ? "true" : "false") << '\n';
    out << r.graph_id << ",degree-rule,,," << (r.degree_rule_match ? "true" : "false") << '\n';
    out << r.graph_id << ",complement-pairing,,,"
        << (r.complement_pairing_match ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string report_text(const CorpusReport& report, bool include_timing) {
  std::ostringstream out;
  out << "spec: " << report.spec.dump() << '\n';
  out << "graphs: " << report.total << '\n';
  out << "failures: " << report.failures.size() << '\n';
  for (const VerificationReport& r : report.failures) {
    out << "FAIL " << r.graph_id << ':';
    for (const auto& [id, check] : r.per_formula) {
      if (check.match) continue;
      out << ' ' << formula_name(id);
      if (!check.error.empty()) {
        out << "(error)";
      } else if (check.formula_value && check.oracle_value) {
        out << "(formula=" << *check.formula_value << " oracle=" << *check.oracle_value
            << " diff=" << *check.formula_value - *check.oracle_value << ')';
      }
    }
    if (!r.degree_rule_match) out << " degree-rule";
    if (!r.complement_pairing_match) out << " complement-pairing";
    out << '\n';
  }
  if (include_timing) out << "elapsed_ms: " << report.elapsed_ms << '\n';
  out << "status: " << (report.all_passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace xform
