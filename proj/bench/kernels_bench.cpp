// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "periodlab/graph.hpp"
#include "periodlab/kernels.hpp"

using namespace periodlab;

namespace {

DirectedMultigraph random_graph(std::size_t n, std::size_t edges, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);  // keep it irreducible
  while (e.size() < edges) e.emplace_back(pick(rng), pick(rng));
  return DirectedMultigraph::from_edges(n, e);
}

// Sparse graph with long chains: what realizations look like.
DirectedMultigraph chained(std::size_t factor) { return random_graph(12, 30, 1).subdivide(factor); }

void BM_multiply(benchmark::State& state)
{
  const auto a = BigMatrix::adjacency(random_graph(state.range(0), 4 * state.range(0), 2));
  const auto a8 = matrix_power(a, 8);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a8, a8));
}

void BM_multiply_serial(benchmark::State& state)
{
  const auto a = BigMatrix::adjacency(random_graph(state.range(0), 4 * state.range(0), 2));
  const auto a8 = matrix_power(a, 8);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a8, a8));
}

void BM_trace_sequence(benchmark::State& state)
{
  const auto g = chained(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_sequence(g, 200));
}

void BM_trace_sequence_serial(benchmark::State& state)
{
  const auto g = chained(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_sequence_serial(g, 200));
}

void BM_closed_paths(benchmark::State& state)
{
  const auto g = random_graph(8, 16, 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_closed_paths(g, state.range(0)));
}

void BM_closed_paths_serial(benchmark::State& state)
{
  const auto g = random_graph(8, 16, 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_closed_paths_serial(g, state.range(0)));
}

}  // namespace

BENCHMARK(BM_multiply)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_serial)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trace_sequence)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trace_sequence_serial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closed_paths)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closed_paths_serial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
