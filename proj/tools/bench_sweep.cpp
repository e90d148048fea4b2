// OpenMP sweep kernels against their serial references.
#include <benchmark/benchmark.h>

#include "netmod/kneser.hpp"
#include "netmod/sweep.hpp"

namespace {

using namespace netmod;

struct Fixture {
  ContextPtr ctx;
  OracleAlphabet alphabet;
  std::vector<std::string> words;

  Fixture(Variety v, std::size_t n, std::size_t len)
      : ctx(GreenContext::uniform(kneser_graph(n, 2), boolean_monoid(), v)),
        alphabet(*ctx),
        words(all_code_words(alphabet, len)) {}
};

const Fixture& mon_fixture() {
  static const Fixture f(Variety::Mon, 4, 5);
  return f;
}

void BM_CanonicalKeys(benchmark::State& state) {
  const auto& f = mon_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_keys(f.words, f.alphabet, f.ctx));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.words.size()));
}

void BM_CanonicalKeysSerial(benchmark::State& state) {
  const auto& f = mon_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_keys_serial(f.words, f.alphabet, f.ctx));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.words.size()));
}

void BM_MonOracleKeys(benchmark::State& state) {
  const auto& f = mon_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(mon_oracle_keys(f.words, f.alphabet));
}

void BM_MonOracleKeysSerial(benchmark::State& state) {
  const auto& f = mon_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(mon_oracle_keys_serial(f.words, f.alphabet));
}

void BM_CongruenceLabels(benchmark::State& state) {
  static const Fixture f(Variety::GMon, 4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(congruence_labels(f.alphabet, Variety::GMon, 5));
}

void BM_CongruenceLabelsSerial(benchmark::State& state) {
  static const Fixture f(Variety::GMon, 4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(congruence_labels_serial(f.alphabet, Variety::GMon, 5));
}

}  // namespace

BENCHMARK(BM_CanonicalKeys)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalKeysSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonOracleKeys)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonOracleKeysSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CongruenceLabels)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CongruenceLabelsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
