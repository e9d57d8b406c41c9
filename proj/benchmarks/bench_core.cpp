#include <benchmark/benchmark.h>

#include "gsws/oracle.hpp"
#include "gsws/scattering.hpp"
#include "gsws/specfun.hpp"
#include "gsws/spectrum.hpp"

using namespace gsws;

namespace {

PotentialParams reference_params() {
  PotentialParams p;
  p.v0 = 100.0;
  p.w0 = 250.0;
  p.a = 1.0;
  p.L = 6.0;
  return p;
}

void BM_LogGamma(benchmark::State& state) {
  Complex z(0.5, 3.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += Complex(1e-9, 1e-9);
  }
}
BENCHMARK(BM_LogGamma);

void BM_Hyp2f1Series(benchmark::State& state) {
  const Complex a(0.5, 2.0), b(0.5, -2.0), c(1.4, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(a, b, c, 0.45));
}
BENCHMARK(BM_Hyp2f1Series);

void BM_Hyp2f1Connection(benchmark::State& state) {
  const Complex a(0.5, 2.0), b(0.5, -2.0), c(1.4, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(a, b, c, 0.99));
}
BENCHMARK(BM_Hyp2f1Connection);

void BM_ConnectionCoefficients(benchmark::State& state) {
  const auto p = reference_params();
  const auto dp = derive(p, Complex(20.0, 0.0), Regime::kScattering);
  for (auto _ : state) benchmark::DoNotOptimize(connection_coefficients(dp));
}
BENCHMARK(BM_ConnectionCoefficients);

void BM_ReflectionTransmission(benchmark::State& state) {
  const auto p = reference_params();
  for (auto _ : state)
    benchmark::DoNotOptimize(reflection_transmission(p, 20.0));
}
BENCHMARK(BM_ReflectionTransmission);

void BM_ReflectionTransmissionExact(benchmark::State& state) {
  const auto p = reference_params();
  for (auto _ : state)
    benchmark::DoNotOptimize(reflection_transmission_exact(p, 20.0));
}
BENCHMARK(BM_ReflectionTransmissionExact);

void BM_ResonanceScan(benchmark::State& state) {
  const auto p = reference_params();
  for (auto _ : state)
    benchmark::DoNotOptimize(find_resonances(p, 1.0, 60.0));
}
BENCHMARK(BM_ResonanceScan)->Unit(benchmark::kMillisecond);

void BM_BoundSpectrum(benchmark::State& state) {
  auto p = reference_params();
  BoundOptions opt;
  opt.x_samples = 3;  // spectrum cost, not sampling cost
  for (auto _ : state)
    benchmark::DoNotOptimize(find_bound_states(p, opt));
}
BENCHMARK(BM_BoundSpectrum)->Unit(benchmark::kMillisecond);

void BM_OracleRT(benchmark::State& state) {
  const auto p = reference_params();
  const auto grid = IntegrationGrid::recommended(p, 80.0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_rt(p, 20.0, grid));
}
BENCHMARK(BM_OracleRT)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
