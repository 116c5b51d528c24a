#include <benchmark/benchmark.h>

#include "vag/oracles.hpp"
#include "vag/parallel.hpp"

using namespace vag;

namespace {
  CoxeterGraph fc_graph() {
    return CoxeterGraph({"s", "t", "u"}, {{"s", "t", Label(3)}, {"t", "u", Label::infinity()}});
  }

  std::vector<VAWord> const& words() {
    static auto const w = fuzz_relator_words(fc_graph(), 400, 0, 32);
    return w;
  }

  std::vector<Root> b3_roots() {
    auto              sys = system_for(graphs::type_b(3));
    std::vector<Root> out;
    for (auto const& d : roots_bfs(*sys, 16)) {
      out.push_back(d.root);
      out.push_back(-d.root);
    }
    return out;
  }
}  // namespace

// Fresh contexts would still hit the process-wide memo, so these measure the
// cached steady state after the first iteration.
static void BM_VaWpSerial(benchmark::State& st) {
  VAContext ctx(fc_graph());
  for (auto _ : st) benchmark::DoNotOptimize(batch_va_wp_serial(words(), ctx));
}
BENCHMARK(BM_VaWpSerial)->Unit(benchmark::kMillisecond);

static void BM_VaWpOmp(benchmark::State& st) {
  VAContext ctx(fc_graph());
  for (auto _ : st) benchmark::DoNotOptimize(batch_va_wp(words(), ctx));
}
BENCHMARK(BM_VaWpOmp)->Unit(benchmark::kMillisecond);

// The search stage is uncached in hat_label_decision; disable enumeration so
// each pair runs the bounded search.
static void BM_HatSearchSerial(benchmark::State& st) {
  auto       sys   = system_for(graphs::type_b(3));
  auto const roots = b3_roots();
  HatOptions o;
  o.enumerate_finite = false;
  for (auto _ : st) {
    long found = 0;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        found += !hat_label_decision(sys, roots[i], roots[j], o).label.is_infinite();
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_HatSearchSerial)->Unit(benchmark::kMillisecond);

static void BM_HatSearchOmp(benchmark::State& st) {
  auto       sys   = system_for(graphs::type_b(3));
  auto const roots = b3_roots();
  HatOptions o;
  o.enumerate_finite = false;
  long const n       = static_cast<long>(roots.size());
  for (auto _ : st) {
    long found = 0;
#pragma omp parallel for reduction(+ : found) schedule(dynamic)
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        found += !hat_label_decision(sys, roots[i], roots[j], o).label.is_infinite();
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_HatSearchOmp)->Unit(benchmark::kMillisecond);

static void BM_ShortlexSerial(benchmark::State& st) {
  auto                 sys = system_for(graphs::type_b(3));
  SeededRng            rng(0);
  std::vector<CoxWord> w;
  for (int k = 0; k < 2000; ++k) w.push_back(random_cox_word(rng, sys->graph().all_vertices(), 24));
  for (auto _ : st) benchmark::DoNotOptimize(batch_shortlex_serial(sys, w));
}
BENCHMARK(BM_ShortlexSerial)->Unit(benchmark::kMillisecond);

static void BM_ShortlexOmp(benchmark::State& st) {
  auto                 sys = system_for(graphs::type_b(3));
  SeededRng            rng(0);
  std::vector<CoxWord> w;
  for (int k = 0; k < 2000; ++k) w.push_back(random_cox_word(rng, sys->graph().all_vertices(), 24));
  for (auto _ : st) benchmark::DoNotOptimize(batch_shortlex(sys, w));
}
BENCHMARK(BM_ShortlexOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
