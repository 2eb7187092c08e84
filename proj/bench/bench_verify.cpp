#include <benchmark/benchmark.h>

#include "xform/verify.hpp"

using namespace xform;

namespace {

CorpusSpec exhaustive_spec(int max_n) {
  CorpusSpec spec;
  spec.mode = CorpusSpec::Mode::exhaustive;
  spec.exhaustive_max_n = max_n;
  return spec;
}

CorpusSpec random_spec(int count, int n_min, int n_max) {
  CorpusSpec spec;
  spec.mode = CorpusSpec::Mode::random;
  spec.random_count = count;
  spec.random_n_min = n_min;
  spec.random_n_max = n_max;
  spec.seed = 1;
  return spec;
}

void bm_verify_exhaustive_serial(benchmark::State& state) {
  const CorpusSpec spec = exhaustive_spec(static_cast<int>(state.range(0)));
  const std::vector<Graph> graphs = materialize_corpus(spec);
  const auto spec_json = corpus_spec_json(spec);
  for (auto _ : state) {
    CorpusReport report = verify_graphs_serial(graphs, spec_json);
    benchmark::DoNotOptimize(report.total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

void bm_verify_exhaustive_parallel(benchmark::State& state) {
  const CorpusSpec spec = exhaustive_spec(static_cast<int>(state.range(0)));
  const std::vector<Graph> graphs = materialize_corpus(spec);
  const auto spec_json = corpus_spec_json(spec);
  for (auto _ : state) {
    CorpusReport report = verify_graphs(graphs, spec_json);
    benchmark::DoNotOptimize(report.total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

void bm_verify_random_serial(benchmark::State& state) {
  const CorpusSpec spec =
      random_spec(static_cast<int>(state.range(0)), 20, 30);
  const std::vector<Graph> graphs = materialize_corpus(spec);
  const auto spec_json = corpus_spec_json(spec);
  for (auto _ : state) {
    CorpusReport report = verify_graphs_serial(graphs, spec_json);
    benchmark::DoNotOptimize(report.total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

void bm_verify_random_parallel(benchmark::State& state) {
  const CorpusSpec spec =
      random_spec(static_cast<int>(state.range(0)), 20, 30);
  const std::vector<Graph> graphs = materialize_corpus(spec);
  const auto spec_json = corpus_spec_json(spec);
  for (auto _ : state) {
    CorpusReport report = verify_graphs(graphs, spec_json);
    benchmark::DoNotOptimize(report.total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

}  // namespace

BENCHMARK(bm_verify_exhaustive_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_verify_exhaustive_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_verify_random_serial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_verify_random_parallel)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
