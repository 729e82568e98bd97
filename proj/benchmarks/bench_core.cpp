#include "polyhahn/domain.hpp"
#include "polyhahn/families.hpp"
#include "polyhahn/limits.hpp"
#include "polyhahn/operators.hpp"
#include "polyhahn/spectra.hpp"

#include <benchmark/benchmark.h>

using namespace polyhahn;

namespace {

DomainSpec simplexish(int d, int N) {
  std::vector<int> ell(static_cast<std::size_t>(d) + 1, N);
  ell[0] = N - 1;
  return check_admissible(d, N, MultiIndex(ell));
}

void BM_EnumerateV(benchmark::State& state) {
  const auto s = simplexish(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_V(s).size());
}
BENCHMARK(BM_EnumerateV)->Arg(6)->Arg(10)->Arg(14);

void BM_HahnEvaluate(benchmark::State& state) {
  const auto s = simplexish(3, 8);
  const MultiIndex nu{2, 1, 2};
  const MultiIndex x{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(hahn_multi(s, nu, x));
}
BENCHMARK(BM_HahnEvaluate);

void BM_Gram(benchmark::State& state) {
  const auto s = simplexish(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram(s).basis.size());
}
BENCHMARK(BM_Gram)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Spectra(benchmark::State& state) {
  const auto s = check_admissible(3, 4, MultiIndex{3, 3, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(verify_spectra(s).all_exact);
}
BENCHMARK(BM_Spectra)->Unit(benchmark::kMillisecond);

void BM_FourIndexRelation(benchmark::State& state) {
  const OperatorFamily f = HahnFamily{check_admissible(3, 4, MultiIndex{3, 3, 3, 3})};
  for (auto _ : state) benchmark::DoNotOptimize(verify_generator_relation(f, 1, 2, 3, 4).all_hold());
}
BENCHMARK(BM_FourIndexRelation)->Unit(benchmark::kMillisecond);

void BM_InterpolationRank(benchmark::State& state) {
  const auto s = check_admissible(2, 9, MultiIndex{7, 6, 7});
  for (auto _ : state) benchmark::DoNotOptimize(interpolation_rank(s));
}
BENCHMARK(BM_InterpolationRank)->Unit(benchmark::kMillisecond);

void BM_JacobiScan(benchmark::State& state) {
  const auto y1 = Polynomial::variable(2, 0), y2 = Polynomial::variable(2, 1);
  const std::vector<JacobiProbe> probes{{"y1y2", y1 * y2}};
  const std::vector<std::vector<Rational>> points{{Rational(1, 4), Rational(1, 2)}};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        scan_operator_to_jacobi({Rational(2), Rational(3), Rational(1)}, probes, points, default_ladder("jacobi")));
}
BENCHMARK(BM_JacobiScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
