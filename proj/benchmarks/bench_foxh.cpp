#include <benchmark/benchmark.h>

#include <vector>

#include "foxh/gamma.hpp"
#include "foxh/jet.hpp"
#include "foxh/oracle.hpp"
#include "foxh/reductions.hpp"
#include "foxh/series.hpp"

namespace {

using foxh::cplx;

void BM_LogGamma(benchmark::State& state) {
  cplx z(0.3, 7.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(foxh::log_gamma(z));
    z += cplx(1e-9, 0);
  }
}
BENCHMARK(BM_LogGamma);

void BM_Polygamma(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(foxh::polygamma(order, cplx(2.5, -1.5)));
}
BENCHMARK(BM_Polygamma)->Arg(0)->Arg(3)->Arg(8);

void BM_GammaPoleJet(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(foxh::gamma_pole_jet(5, 1.5, cplx(0.25, 0.1), order));
}
BENCHMARK(BM_GammaPoleJet)->Arg(2)->Arg(6);

void BM_Evaluate(benchmark::State& state, const char* id, cplx z) {
  const auto& params = foxh::known_case(id).params;
  for (auto _ : state) benchmark::DoNotOptimize(foxh::evaluate(params, z).value);
}
BENCHMARK_CAPTURE(BM_Evaluate, exp, "exp", cplx(2.0, 1.0));
BENCHMARK_CAPTURE(BM_Evaluate, bessel_k, "bessel_k", cplx(0.25, 0.0));
BENCHMARK_CAPTURE(BM_Evaluate, geometric_near_circle, "geometric", cplx(0.9, 0.0));
BENCHMARK_CAPTURE(BM_Evaluate, bessel_k_mirror, "bessel_k_mirror", cplx(5.0, 0.0));

void BM_TriplePoleCoefficients(benchmark::State& state) {
  auto params = foxh::validate(foxh::RawParams{3, 0, 0, 3, {}, {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}});
  auto groups = foxh::complete_pole_groups(params, foxh::PoleFamily::LowerB, 20).groups;
  for (auto _ : state)
    for (const auto& g : groups) benchmark::DoNotOptimize(foxh::coeff_log_b(params, g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(groups.size()));
}
BENCHMARK(BM_TriplePoleCoefficients);

void BM_Batch(benchmark::State& state) {
  const auto& params = foxh::known_case("bessel_k").params;
  std::vector<cplx> zs;
  for (int k = 1; k <= 64; ++k) zs.push_back(cplx(0.05 * k, 0.02 * k));
  for (auto _ : state) benchmark::DoNotOptimize(foxh::evaluate_batch(params, zs, {}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Batch)->Arg(1)->Arg(4);

void BM_Quadrature(benchmark::State& state) {
  const auto& params = foxh::known_case("bessel_k").params;
  for (auto _ : state) benchmark::DoNotOptimize(foxh::quadrature_eval(params, 0.25).value);
}
BENCHMARK(BM_Quadrature)->Unit(benchmark::kMillisecond);

void BM_ResidueCheck(benchmark::State& state) {
  const auto& params = foxh::known_case("bessel_k").params;
  for (auto _ : state) benchmark::DoNotOptimize(foxh::residue_check(params, -2.0, 0.0, 0.5));
}
BENCHMARK(BM_ResidueCheck);

}  // namespace
BENCHMARK_MAIN();
