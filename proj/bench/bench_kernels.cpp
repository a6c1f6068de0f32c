// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to the
// thread count of interest.
#include <benchmark/benchmark.h>

#include <vector>

#include "hbsums/classical_sums.hpp"
#include "hbsums/kernels.hpp"
#include "hbsums/volkenborn.hpp"

using namespace hbsums;
using namespace hbsums::kernels;

namespace {

std::vector<double> tangent_block(long h, long k) {
  std::vector<double> f;
  for (long r = 1; r <= k; ++r) f.push_back(sawtooth(make_rational(h * r, k)).get_d());
  return f;
}

std::vector<Integer> sign_block(long k) {
  const PeriodicFn f = sign_table(1, k);
  std::vector<Integer> out;
  for (const auto& v : f.values) out.push_back(v.get_num());
  return out;
}

CycloElement twist(long p) {
  const PadicNumber q = PadicNumber::from_rational(p, Rational(1 + p), 24);
  return CycloElement::zeta(p, 1, 24) * (q * q);
}

void BM_HarmonicSerial(benchmark::State& s) {
  const auto f = tangent_block(7, 29);
  for (auto _ : s) benchmark::DoNotOptimize(periodic_harmonic_serial(f, s.range(0)));
}
void BM_HarmonicOmp(benchmark::State& s) {
  const auto f = tangent_block(7, 29);
  for (auto _ : s) benchmark::DoNotOptimize(periodic_harmonic_omp(f, s.range(0)));
}

void BM_AlternatingSerial(benchmark::State& s) {
  const auto t = sign_block(6);
  for (auto _ : s) benchmark::DoNotOptimize(alternating_periodic_sum_serial(t, s.range(0)));
}
void BM_AlternatingOmp(benchmark::State& s) {
  const auto t = sign_block(6);
  for (auto _ : s) benchmark::DoNotOptimize(alternating_periodic_sum_omp(t, s.range(0)));
}

void BM_PowerSumsSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(alternating_power_sums_serial(s.range(0), 6));
}
void BM_PowerSumsOmp(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(alternating_power_sums_omp(s.range(0), 6));
}

void BM_TwistedMomentSerial(benchmark::State& s) {
  const CycloElement u = twist(5);
  for (auto _ : s) benchmark::DoNotOptimize(twisted_moment_serial(u, 3, s.range(0)));
}
void BM_TwistedMomentOmp(benchmark::State& s) {
  const CycloElement u = twist(5);
  for (auto _ : s) benchmark::DoNotOptimize(twisted_moment_omp(u, 3, s.range(0)));
}

}  // namespace

BENCHMARK(BM_HarmonicSerial)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_HarmonicOmp)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_AlternatingSerial)->Arg(78'125)->Arg(1'953'125);
BENCHMARK(BM_AlternatingOmp)->Arg(78'125)->Arg(1'953'125);
BENCHMARK(BM_PowerSumsSerial)->Arg(15'625)->Arg(78'125);
BENCHMARK(BM_PowerSumsOmp)->Arg(15'625)->Arg(78'125);
BENCHMARK(BM_TwistedMomentSerial)->Arg(625)->Arg(3125);
BENCHMARK(BM_TwistedMomentOmp)->Arg(625)->Arg(3125);

BENCHMARK_MAIN();
