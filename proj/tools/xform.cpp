#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xform/formulas.hpp"
#include "xform/generators.hpp"
#include "xform/graph.hpp"
#include "xform/graph6.hpp"
#include "xform/indices.hpp"
#include "xform/transforms.hpp"
#include "xform/verify.hpp"

namespace {

using namespace xform;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct InputStream {
  bool use_stdin = true;
  std::ifstream file;
  std::istream& get() { return use_stdin ? std::cin : file; }
};

std::optional<InputStream> open_input(const std::string& path) {
  auto s = std::make_optional<InputStream>();
  if (path == "-") return s;
  s->use_stdin = false;
  s->file.open(path);
  if (!s->file) return std::nullopt;
  return s;
}

struct OutputStream {
  bool use_stdout = true;
  std::ofstream file;
  std::ostream& get() { return use_stdout ? std::cout : file; }
};

std::optional<OutputStream> open_output(const std::string& path) {
  auto s = std::make_optional<OutputStream>();
  if (path.empty()) return s;
  s->use_stdout = false;
  s->file.open(path);
  if (!s->file) return std::nullopt;
  return s;
}

std::string display_path(const std::string& path) {
  return path == "-" ? std::string("<stdin>") : path;
}

// Applies fn to every input graph: each line of a graph6 stream, or the one
// graph of an edge-list file. Reports parse and processing errors with their
// source location and returns the exit code.
template <typename Fn>
int for_each_graph(const std::string& path, const std::string& input_format, Fn&& fn) {
  auto in = open_input(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return kExitUsage;
  }
  if (input_format == "edgelist") {
    try {
      const Graph g = read_edge_list(in->get());
      fn(g);
    } catch (const std::exception& e) {
      std::cerr << "error: " << display_path(path) << ": " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in->get(), line)) {
    ++lineno;
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    try {
      const Graph g = parse_graph6(line);
      fn(g);
    } catch (const std::exception& e) {
      std::cerr << "error: " << display_path(path) << " line " << lineno << ": " << e.what()
                << '\n';
      return kExitUsage;
    }
  }
  return kExitOk;
}

struct IoOptions {
  std::string input = "-";
  std::string input_format = "graph6";
  std::string format;
  std::string out;
};

void add_input_options(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("-i,--input", io.input, "input file, or '-' for stdin")
      ->capture_default_str();
  cmd->add_option("--input-format", io.input_format,
                  "graph6 = one graph per line; edgelist = single edge-list file")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
}

int run_indices(const IoOptions& io) {
  auto out = open_output(io.out);
  if (!out) {
    std::cerr << "error: cannot open " << io.out << " for writing\n";
    return kExitUsage;
  }
  std::ostream& os = out->get();
  bool csv_header_written = false;
  return for_each_graph(io.input, io.input_format, [&](const Graph& g) {
    const IndexSet x = index_set(g);
    if (io.format == "json") {
      nlohmann::ordered_json j;
      j["n"] = x.n;
      j["m"] = x.m;
      j["M1"] = x.M1;
      j["M2"] = x.M2;
      j["F"] = x.F;
      j["xi4"] = x.xi4;
      j["rezg3"] = x.rezg3;
      os << j.dump() << '\n';
    } else if (io.format == "csv") {
      if (!csv_header_written) {
        os << "graph6,n,m,M1,M2,F,xi4,rezg3\n";
        csv_header_written = true;
      }
      os << to_graph6(g) << ',' << x.n << ',' << x.m << ',' << x.M1 << ',' << x.M2 << ','
         << x.F << ',' << x.xi4 << ',' << x.rezg3 << '\n';
    } else {  // text
      os << to_graph6(g) << ": n=" << x.n << " m=" << x.m << " M1=" << x.M1
         << " M2=" << x.M2 << " F=" << x.F << " xi4=" << x.xi4 << " rezg3=" << x.rezg3
         << " connected=" << (is_connected(g) ? "yes" : "no") << '\n';
    }
  });
}

int run_transform(const IoOptions& io, const std::string& kind_str, bool predict) {
  const std::optional<TransformKind> kind = parse_kind(kind_str);
  if (!kind) {
    std::cerr << "error: unknown transform kind '" << kind_str
              << "' (use t1, t2, or a sign triple like +++ or --+)\n";
    return kExitUsage;
  }
  if (predict && io.format != "text") {
    std::cerr << "error: --predict needs --format text\n";
    return kExitUsage;
  }
  auto out = open_output(io.out);
  if (!out) {
    std::cerr << "error: cannot open " << io.out << " for writing\n";
    return kExitUsage;
  }
  std::ostream& os = out->get();
  bool first = true;
  return for_each_graph(io.input, io.input_format, [&](const Graph& g) {
    const Graph t = transform(g, *kind);
    if (io.format == "graph6") {
      os << to_graph6(t) << '\n';
      return;
    }
    if (!first) os << '\n';
    first = false;
    write_edge_list(os, t);
    if (predict) {
      const DegreePrediction p = predicted_degrees(g, *kind);
      const int n = g.vertex_count();
      os << "# kind " << kind_name(*kind) << " predicted degrees\n";
      for (int v = 0; v < n; ++v) os << "# v" << v << ": " << p.vertex_degree[v] << '\n';
      for (int k = 0; k < g.edge_count(); ++k) {
        const EdgeLabel& e = g.edges()[k];
        os << "# e" << (n + k) << '{' << e.u << ',' << e.v << "}: " << p.edge_degree[k]
           << '\n';
      }
    }
  });
}

struct GenerateOptions {
  std::string family;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::uint64_t seed = 0;
  bool has_n = false, has_m = false, has_a = false, has_b = false, has_seed = false;
};

int run_generate(const GenerateOptions& gen, const IoOptions& io) {
  const std::optional<Family> family = parse_family(gen.family);
  if (!family) {
    std::cerr << "error: unknown family '" << gen.family
              << "' (path, cycle, complete, star, complete_bipartite, random_gnm)\n";
    return kExitUsage;
  }
  auto out = open_output(io.out);
  if (!out) {
    std::cerr << "error: cannot open " << io.out << " for writing\n";
    return kExitUsage;
  }
  const auto need = [&](bool present, const char* flag) {
    if (!present)
      throw std::invalid_argument(std::string(flag) + " is required for family " + gen.family);
  };
  try {
    Graph g = [&] {
      switch (*family) {
        case Family::path: need(gen.has_n, "-n"); return make_path(static_cast<int>(gen.n));
        case Family::cycle: need(gen.has_n, "-n"); return make_cycle(static_cast<int>(gen.n));
        case Family::complete:
          need(gen.has_n, "-n");
          return make_complete(static_cast<int>(gen.n));
        case Family::star: need(gen.has_n, "-n"); return make_star(static_cast<int>(gen.n));
        case Family::complete_bipartite:
          need(gen.has_a, "-a");
          need(gen.has_b, "-b");
          return make_complete_bipartite(static_cast<int>(gen.a), static_cast<int>(gen.b));
        case Family::random_gnm:
          need(gen.has_n, "-n");
          need(gen.has_m, "-m");
          need(gen.has_seed, "--seed");
          return make_random_gnm(static_cast<int>(gen.n), gen.m, gen.seed);
      }
      throw std::invalid_argument("unreachable family");
    }();
    if (io.format == "text")
      write_edge_list(out->get(), g);
    else
      out->get() << to_graph6(g) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

// "cycle:3..12,star:4" -> ranges; throws std::invalid_argument on bad syntax.
std::vector<FamilyRange> parse_family_ranges(const std::string& arg) {
  std::vector<FamilyRange> ranges;
  std::size_t start = 0;
  while (start <= arg.size()) {
    const std::size_t comma = std::min(arg.find(',', start), arg.size());
    const std::string item = arg.substr(start, comma - start);
    start = comma + 1;
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("family item '" + item + "' needs the form name:lo..hi");
    const std::optional<Family> family = parse_family(item.substr(0, colon));
    if (!family) throw std::invalid_argument("unknown family in '" + item + "'");
    if (*family == Family::complete_bipartite || *family == Family::random_gnm)
      throw std::invalid_argument("family " + item.substr(0, colon) +
                                  " takes no n-range; use path, cycle, complete or star");
    const std::string range = item.substr(colon + 1);
    const std::size_t dots = range.find("..");
    int lo = 0, hi = 0;
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoi(range);
      } else {
        lo = std::stoi(range.substr(0, dots));
        hi = std::stoi(range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range in '" + item + "'");
    }
    ranges.push_back(FamilyRange{*family, lo, hi});
  }
  if (ranges.empty()) throw std::invalid_argument("no families given");
  return ranges;
}

struct VerifyOptions {
  int exhaustive = 0;
  int random_count = 0;
  int n_min = 6;
  int n_max = 12;
  std::uint64_t seed = 0;
  std::string families;
  std::string input;
  std::string input_format = "graph6";
  bool dedupe = false;
  bool timing = false;
  int threads = 0;
  std::string format = "json";
  std::string out;
  bool has_exhaustive = false, has_random = false, has_families = false, has_input = false;
};

int env_threads() {
  const char* env = std::getenv("XFORM_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    std::cerr << "warning: ignoring XFORM_THREADS='" << env << "'\n";
    return 0;
  }
  return static_cast<int>(v);
}

int run_verify(const VerifyOptions& opt) {
  const int sources = int(opt.has_exhaustive) + int(opt.has_random) + int(opt.has_families) +
                      int(opt.has_input);
  if (sources != 1) {
    std::cerr << "error: choose exactly one of --exhaustive, --random, --families, --input\n";
    return kExitUsage;
  }
  auto out = open_output(opt.out);
  if (!out) {
    std::cerr << "error: cannot open " << opt.out << " for writing\n";
    return kExitUsage;
  }
  const int threads = opt.threads > 0 ? opt.threads : env_threads();

  CorpusReport report;
  try {
    if (opt.has_input) {
      std::vector<Graph> graphs;
      const int rc = for_each_graph(opt.input, opt.input_format,
                                    [&](const Graph& g) { graphs.push_back(g); });
      if (rc != kExitOk) return rc;
      if (opt.dedupe) {
        std::vector<Graph> unique;
        std::vector<std::string> seen;
        for (Graph& g : graphs) {
          std::string id = to_graph6(g);
          if (std::find(seen.begin(), seen.end(), id) == seen.end()) {
            seen.push_back(std::move(id));
            unique.push_back(std::move(g));
          }
        }
        graphs = std::move(unique);
      }
      nlohmann::ordered_json spec;
      spec["mode"] = "file";
      spec["path"] = display_path(opt.input);
      spec["dedupe"] = opt.dedupe;
      report = verify_graphs(graphs, std::move(spec), threads);
    } else {
      CorpusSpec spec;
      if (opt.has_exhaustive) {
        spec.mode = CorpusSpec::Mode::exhaustive;
        spec.exhaustive_max_n = opt.exhaustive;
      } else if (opt.has_random) {
        spec.mode = CorpusSpec::Mode::random;
        spec.random_count = opt.random_count;
        spec.random_n_min = opt.n_min;
        spec.random_n_max = opt.n_max;
        spec.seed = opt.seed;
      } else {
        spec.mode = CorpusSpec::Mode::families;
        spec.families = parse_family_ranges(opt.families);
      }
      spec.dedupe = opt.dedupe;
      report = verify_corpus(spec, threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostream& os = out->get();
  if (opt.format == "json")
    os << report_json(report, opt.timing).dump() << '\n';
  else if (opt.format == "csv")
    os << report_csv(report);
  else
    os << report_text(report, opt.timing);
  std::cerr << "verified " << report.total << " graphs, " << report.failures.size()
            << " failures in " << report.elapsed_ms << " ms\n";
  return report.all_passed() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-based topological indices and total transformation graphs"};
  app.require_subcommand(1);

  IoOptions idx_io;
  idx_io.format = "json";
  CLI::App* cmd_indices =
      app.add_subcommand("indices", "compute the degree-sum invariants of each input graph");
  add_input_options(cmd_indices, idx_io);
  cmd_indices->add_option("-f,--format", idx_io.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd_indices->add_option("-o,--out", idx_io.out, "write output to a file instead of stdout");

  IoOptions tr_io;
  tr_io.format = "graph6";
  std::string kind_str;
  bool predict = false;
  CLI::App* cmd_transform =
      app.add_subcommand("transform", "build a transformation graph of each input graph");
  add_input_options(cmd_transform, tr_io);
  cmd_transform
      ->add_option("-k,--kind", kind_str,
                   "t1, t2, or a sign triple (+++, ++-, +-+, +--, -++, -+-, --+, ---); "
                   "spell minus-leading kinds as --kind=---")
      ->required();
  cmd_transform->add_option("-f,--format", tr_io.format, "graph6 | text (edge list)")
      ->check(CLI::IsMember({"graph6", "text"}))
      ->capture_default_str();
  cmd_transform->add_flag("--predict", predict,
                          "append the closed-form degree table (text format only)");
  cmd_transform->add_option("-o,--out", tr_io.out, "write output to a file instead of stdout");

  GenerateOptions gen;
  IoOptions gen_io;
  gen_io.format = "graph6";
  CLI::App* cmd_generate = app.add_subcommand("generate", "emit one graph from a family");
  cmd_generate
      ->add_option("family", gen.family,
                   "path | cycle | complete | star | complete_bipartite | random_gnm")
      ->required();
  CLI::Option* gen_n = cmd_generate->add_option("-n", gen.n, "vertex count");
  CLI::Option* gen_m = cmd_generate->add_option("-m", gen.m, "edge count (random_gnm)");
  CLI::Option* gen_a = cmd_generate->add_option("-a", gen.a, "first part size (complete_bipartite)");
  CLI::Option* gen_b = cmd_generate->add_option("-b", gen.b, "second part size (complete_bipartite)");
  CLI::Option* gen_seed = cmd_generate->add_option("--seed", gen.seed, "PRNG seed (random_gnm)");
  cmd_generate->add_option("-f,--format", gen_io.format, "graph6 | text (edge list)")
      ->check(CLI::IsMember({"graph6", "text"}))
      ->capture_default_str();
  cmd_generate->add_option("-o,--out", gen_io.out, "write output to a file instead of stdout");

  VerifyOptions ver;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "check every closed form against brute-force construction over a corpus");
  CLI::Option* v_ex = cmd_verify->add_option(
      "--exhaustive", ver.exhaustive, "all labeled graphs with 1 <= n <= N (N <= 7)");
  CLI::Option* v_rand =
      cmd_verify->add_option("--random", ver.random_count, "count of seeded G(n,m) draws");
  cmd_verify->add_option("--nmin", ver.n_min, "smallest n for --random")->capture_default_str();
  cmd_verify->add_option("--nmax", ver.n_max, "largest n for --random")->capture_default_str();
  cmd_verify->add_option("--seed", ver.seed, "PRNG seed for --random")->capture_default_str();
  CLI::Option* v_fam = cmd_verify->add_option(
      "--families", ver.families, "comma list of name:lo..hi ranges, e.g. cycle:3..12");
  CLI::Option* v_in =
      cmd_verify->add_option("--input", ver.input, "verify graphs from a file ('-' = stdin)");
  cmd_verify
      ->add_option("--input-format", ver.input_format,
                   "graph6 = one graph per line; edgelist = single edge-list file")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  cmd_verify->add_flag("--dedupe", ver.dedupe, "drop graph6-identical repeats");
  cmd_verify->add_flag("--timing", ver.timing,
                       "fill elapsed_ms in the report (omit for byte-stable output)");
  cmd_verify->add_option("--threads", ver.threads,
                         "worker threads (default: XFORM_THREADS env var, then OpenMP default)");
  cmd_verify->add_option("-f,--format", ver.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd_verify->add_option("-o,--out", ver.out, "write the report to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  gen.has_n = gen_n->count() > 0;
  gen.has_m = gen_m->count() > 0;
  gen.has_a = gen_a->count() > 0;
  gen.has_b = gen_b->count() > 0;
  gen.has_seed = gen_seed->count() > 0;
  ver.has_exhaustive = v_ex->count() > 0;
  ver.has_random = v_rand->count() > 0;
  ver.has_families = v_fam->count() > 0;
  ver.has_input = v_in->count() > 0;

  if (app.got_subcommand(cmd_indices)) return run_indices(idx_io);
  if (app.got_subcommand(cmd_transform)) return run_transform(tr_io, kind_str, predict);
  if (app.got_subcommand(cmd_generate)) return run_generate(gen, gen_io);
  if (app.got_subcommand(cmd_verify)) return run_verify(ver);
  return kExitUsage;
}
