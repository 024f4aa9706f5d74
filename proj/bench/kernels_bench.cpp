// Serial reference kernels against their OpenMP counterparts on the
// traceless adjoint of GL_n.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "rankin/exterior_kernels.hpp"

using namespace rankin;
using namespace rankin::kernels;

namespace {

struct Adjoint {
  WeightCodec codec;
  std::vector<Code> deltas;

  explicit Adjoint(std::size_t n) : codec(n, std::max<Entry>(1, static_cast<Entry>(n) - 1)) {
    for (const auto& w : adjoint_weights(n)) deltas.push_back(codec.delta(w));
  }
};

template <auto Kernel>
void ladder(benchmark::State& state) {
  const Adjoint adj(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(adj.deltas, adj.codec));
  state.counters["subsets"] = static_cast<double>(std::uint64_t{1} << adj.deltas.size());
  state.counters["threads"] = max_threads();
}

template <auto Kernel>
void level(benchmark::State& state) {
  const Adjoint adj(static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(adj.deltas, adj.codec, k));
  state.counters["threads"] = max_threads();
}

}  // namespace

BENCHMARK(ladder<ladder_serial>)->Name("ladder_serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(ladder<ladder_parallel>)->Name("ladder_parallel")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(level<level_serial>)->Name("level_serial")->Args({4, 7})->Args({5, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(level<level_parallel>)->Name("level_parallel")->Args({4, 7})->Args({5, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
