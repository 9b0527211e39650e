#include <array>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "gromov/combination.hpp"
#include "gromov/program.hpp"
#include "gromov/random.hpp"
#include "gromov/reconstruct.hpp"
#include "gromov/spectral.hpp"
#include "gromov/tree.hpp"

namespace {

using namespace gromov;

// Random recursive tree on s, v1..vn with every non-root node in the base set.
GromovMatrix random_matrix(std::size_t n, std::uint64_t stream) {
  Engine engine = make_engine({2024, stream});
  std::uniform_real_distribution<double> weight(1.0, 5.0);
  std::vector<std::string> names{"s"};
  std::vector<TreeEdge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("v" + std::to_string(i));
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(engine);
    edges.push_back({names[parent], names[i], weight(engine)});
  }
  std::vector<std::string> base_set(names.begin() + 1, names.end());
  return gromov_matrix(Base(WeightedTree(std::move(edges)), "s", std::move(base_set)));
}

void BM_GConvex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::array<GromovMatrix, 3> ms{random_matrix(n, 1), random_matrix(n, 2),
                                       random_matrix(n, 3)};
  const CombinationWeights w({0.2, 0.3, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(g_convex(ms, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GConvex)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Fixpoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::array<GromovMatrix, 2> ms{random_matrix(n, 1), random_matrix(n, 2)};
  const Matrix m = convex(ms, CombinationWeights::pair(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(g_convex_fixpoint(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fixpoint)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Reconstruct(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_tree(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reconstruct)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_Validate(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(validate(m.entries()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Validate)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_LambdaMin(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_min(m));
}
BENCHMARK(BM_LambdaMin)->RangeMultiplier(2)->Range(8, 256);

void BM_LambdaMinBound(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 6);
  const BuildProgram program = decompose(reconstruct_tree(m));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_min_bound(program));
}
BENCHMARK(BM_LambdaMinBound)->RangeMultiplier(2)->Range(8, 256);

}  // namespace
BENCHMARK_MAIN();
