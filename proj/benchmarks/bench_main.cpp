#include <benchmark/benchmark.h>

#include "edmf/classify.hpp"
#include "edmf/hom.hpp"
#include "edmf/sampling.hpp"
#include "edmf/smith.hpp"

namespace {

using namespace edmf;

void BM_SmithIntegers(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Sampler sampler(7);
  std::vector<Matrix> inputs;
  for (int k = 0; k < 64; ++k) inputs.push_back(sampler.matrix(Ring::integers(), n, n, 50));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith(inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_SmithIntegers)->DenseRange(2, 6, 2);

void BM_SmithGF3(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Ring ring = Ring::polynomials(3);
  Sampler sampler(11);
  std::vector<Matrix> inputs;
  for (int k = 0; k < 64; ++k) inputs.push_back(sampler.matrix(ring, n, n, 4));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith(inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_SmithGF3)->DenseRange(2, 6, 2);

void BM_HmfHomPrimary(benchmark::State& state) {
  const Ring Z = Ring::integers();
  const int n = static_cast<int>(state.range(0));
  const Element p = Z.from_int(3);
  const Element W = pow(p, n);
  const auto a = elementary(pow(p, 1), W);
  const auto b = elementary(pow(p, n - 1), W);
  for (auto _ : state) benchmark::DoNotOptimize(hmf_hom(a, b));
}
BENCHMARK(BM_HmfHomPrimary)->DenseRange(2, 6, 2);

void BM_HmfHomConjugate(benchmark::State& state) {
  const Ring Z = Ring::integers();
  const Element W = Z.from_int(360);
  Sampler sampler(3);
  const auto a = sampler.conjugate(
      direct_sum(elementary(Z.from_int(2), W), elementary(Z.from_int(12), W)), 6);
  const auto b = sampler.conjugate(
      direct_sum(elementary(Z.from_int(4), W), elementary(Z.from_int(3), W)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(hmf_hom(a, b));
}
BENCHMARK(BM_HmfHomConjugate);

void BM_ConeGrid360(benchmark::State& state) {
  const Ring Z = Ring::integers();
  const Element W = Z.from_int(360);
  std::vector<MatrixFactorization> objects;
  for (long d = 1; d <= 360; ++d)
    if (360 % d == 0) objects.push_back(elementary(Z.from_int(d), W));
  const Element r = Z.from_int(6);
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& a : objects)
      for (const auto& b : objects) {
        const auto f = elementary_morphism(a, b, r);
        count += invariant_factors(cone(f).u()).size();
        benchmark::DoNotOptimize(cone_split(f));
      }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ConeGrid360)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
