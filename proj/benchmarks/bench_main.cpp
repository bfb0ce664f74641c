#include <benchmark/benchmark.h>

#include "rnspectra/analysis.hpp"
#include "rnspectra/linalg.hpp"
#include "rnspectra/models.hpp"
#include "rnspectra/moments.hpp"
#include "rnspectra/spectral.hpp"

namespace {

using namespace rnspectra;

const Timeserie& fixture() {
  static const Timeserie ts =
      gen_two_stage({{-0.01, -0.1}, {10.0, 10.0}, 0.01, StageKind::LinearDecay});
  return ts;
}

void BM_ComputeMoments(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& ts = fixture();
  const auto spec = make_basis(BasisFamily::Chebyshev, n, ts.xs.front(), ts.xs.back());
  for (auto _ : state) {
    auto ms = compute_moments(ts, spec, DxMode::SampleDX);
    benchmark::DoNotOptimize(ms.q.data());
  }
}
BENCHMARK(BM_ComputeMoments)->Arg(16)->Arg(50)->Arg(100);

void BM_BuildMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& ts = fixture();
  const auto spec = make_basis(BasisFamily::Chebyshev, n, ts.xs.front(), ts.xs.back());
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  for (auto _ : state) {
    auto m = build_matrix(ms, MomentKind::DFQ, n);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_BuildMatrix)->Arg(16)->Arg(50)->Arg(100);

void BM_SolveGep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& ts = fixture();
  const auto spec = make_basis(BasisFamily::Chebyshev, n, ts.xs.front(), ts.xs.back());
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  const auto pair = make_operator_pair(ms, PairLabel::Derivative, n);
  for (auto _ : state) {
    auto sp = solve_gep(pair);
    benchmark::DoNotOptimize(sp.lambdas.data());
  }
}
BENCHMARK(BM_SolveGep)->Arg(16)->Arg(50)->Arg(100);

void BM_RnInterpolatePoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& ts = fixture();
  const auto spec = make_basis(BasisFamily::Chebyshev, n, ts.xs.front(), ts.xs.back());
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  const auto gram = build_matrix(ms, MomentKind::Q, n);
  const auto fqm = build_matrix(ms, MomentKind::FQ, n);
  const GramSolver solver(gram);
  double y = ts.xs.front();
  for (auto _ : state) {
    y += 1e-3;
    if (y > ts.xs.back()) y = ts.xs.front();
    benchmark::DoNotOptimize(rn_interpolate(fqm, solver, spec, y));
  }
}
BENCHMARK(BM_RnInterpolatePoint)->Arg(16)->Arg(50);

void BM_FullAnalysis(benchmark::State& state) {
  const auto& ts = fixture();
  for (auto _ : state) {
    auto res = analyze(ts, 50, DxMode::SampleDX);
    benchmark::DoNotOptimize(res.rows_direct.data());
  }
}
BENCHMARK(BM_FullAnalysis)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
