#include <benchmark/benchmark.h>

#include <cmath>

#include "tmahler/lseries.hpp"
#include "tmahler/mahler.hpp"
#include "tmahler/parse.hpp"
#include "tmahler/paths.hpp"
#include "tmahler/periods.hpp"
#include "tmahler/specfun.hpp"

namespace {

using tmahler::cplx;

void BM_Dilog(benchmark::State& state) {
  cplx z(0.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmahler::dilog(z));
    z += cplx(1e-9, 0.0);
  }
}
BENCHMARK(BM_Dilog);

void BM_BlochWigner(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::bloch_wigner(cplx(0.5, 0.8)));
}
BENCHMARK(BM_BlochWigner);

void BM_EllipK(benchmark::State& state) {
  const tmahler::EllipticModulus k(cplx(0.0, 0.618));
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::ellipk(k));
}
BENCHMARK(BM_EllipK);

void BM_MahlerSmyth(benchmark::State& state) {
  const auto p = tmahler::parse_polynomial("x+y+1");
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::mahler_torus_2d(p, {1.0, 1.0}, tol));
}
BENCHMARK(BM_MahlerSmyth)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MahlerR(benchmark::State& state) {
  const auto p = tmahler::parse_polynomial("(x+1)*y^2 + (x^2+4*x+1)*y + x^2 + x");
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::mahler_torus_2d(p, {1.21, 1.1}, 1e-6));
}
BENCHMARK(BM_MahlerR)->Unit(benchmark::kMillisecond);

void BM_LValue2(benchmark::State& state) {
  const auto e = tmahler::WeierstrassCurve::e20();
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::l_value_2(e));
}
BENCHMARK(BM_LValue2)->Unit(benchmark::kMillisecond);

void BM_ApCoefficients(benchmark::State& state) {
  const auto e = tmahler::WeierstrassCurve::e20();
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::an_coefficients(e, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ApCoefficients)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_EllipticDilog(benchmark::State& state) {
  const auto e = tmahler::WeierstrassCurve::e20();
  const auto lattice = tmahler::periods(e);
  const auto p = tmahler::ComplexPoint::affine(-1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::elliptic_dilog(p, e, lattice));
}
BENCHMARK(BM_EllipticDilog);

void BM_PeriodIntegral(benchmark::State& state) {
  const tmahler::BranchId id{state.range(0) == 0 ? tmahler::Family::S : tmahler::Family::R, tmahler::Sign::Minus};
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::period_integral(id, 1.0, 1e-10));
}
BENCHMARK(BM_PeriodIntegral)->Arg(0)->Arg(1);

void BM_Winding(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tmahler::winding({tmahler::Family::R, tmahler::Sign::Minus}, 1.0));
}
BENCHMARK(BM_Winding)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
