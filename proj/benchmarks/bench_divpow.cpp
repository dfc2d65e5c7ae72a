#include <benchmark/benchmark.h>

#include <random>

#include "divpow/divpow.hpp"

using namespace divpow;

namespace {

void BM_StarBasisPairs(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto all = basis_elements(n, 2, 2);
  for (auto _ : state) {
    std::size_t terms = 0;
    for (const auto& a : all)
      for (const auto& b : all) terms += star(a, b).terms().size();
    benchmark::DoNotOptimize(terms);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size() * all.size()));
}
BENCHMARK(BM_StarBasisPairs)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_StarRandom(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<GammaElem> us, vs;
  for (int i = 0; i < 32; ++i) {
    us.push_back(random_gamma_elem(rng, n, 3, 3));
    vs.push_back(random_gamma_elem(rng, n, 3, 3));
  }
  for (auto _ : state)
    for (std::size_t i = 0; i < us.size(); ++i) benchmark::DoNotOptimize(star(us[i], vs[i]));
}
BENCHMARK(BM_StarRandom)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CharGen(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const GenericMatrixContext ctx(n, 2);
  const Word mu = parse_word("x1.x2.x1.x2.x2.x1");
  for (auto _ : state)
    for (std::uint32_t i = 1; i <= n; ++i) benchmark::DoNotOptimize(char_gen(ctx, mu, i));
}
BENCHMARK(BM_CharGen)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_NormExtraction(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const GenericMatrixContext ctx(n, 2);
  std::vector<Part> parts{{parse_word("x1"), 1}, {parse_word("x1.x2"), 1}};
  if (n >= 3) parts.emplace_back(parse_word("x2"), 1);
  const GammaBasisElem b(n, parts);
  for (auto _ : state) benchmark::DoNotOptimize(norm_basis_by_extraction(ctx, b));
}
BENCHMARK(BM_NormExtraction)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_DecomposeReduce(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto all = basis_elements(n, 2, 3);
  for (auto _ : state)
    for (const auto& b : all) benchmark::DoNotOptimize(reduce_powers(decompose(b)));
}
BENCHMARK(BM_DecomposeReduce)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Necklaces(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(necklaces_up_to(3, d));
}
BENCHMARK(BM_Necklaces)->Arg(6)->Arg(8);

void BM_HcEval(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::vector<RatMatrix> xs(2, RatMatrix(n, n));
  for (auto& x : xs)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = Rat(entry(rng));
  const RepPoint r(n, xs);
  for (auto _ : state) benchmark::DoNotOptimize(hc_eval(r, n * n));
}
BENCHMARK(BM_HcEval)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
