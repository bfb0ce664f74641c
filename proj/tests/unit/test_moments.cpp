#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rnspectra/errors.hpp"
#include "rnspectra/linalg.hpp"
#include "rnspectra/models.hpp"
#include "rnspectra/moments.hpp"

using namespace rnspectra;

namespace {

Timeserie uniform_series(double lo, double hi, int count, double (*f)(double)) {
  Timeserie ts;
  for (int i = 0; i < count; ++i) {
    const double x = lo + (hi - lo) * i / (count - 1);
    ts.xs.push_back(x);
    ts.fs.push_back(f(x));
  }
  return ts;
}

double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }

}  // namespace

TEST_CASE("constant signal: telescoping zeroth moments") {
  const auto ts = uniform_series(0.0, 10.0, 11, [](double) { return 3.0; });
  const auto spec = make_basis(BasisFamily::Chebyshev, 3, 0.0, 10.0);
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  CHECK(ms.q[0] == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(ms.fq[0] == doctest::Approx(30.0).epsilon(1e-12));
  CHECK(ms.dfq[0] == 0.0);
}

TEST_CASE("linear signal telescopes the derivative moment") {
  const auto ts = uniform_series(0.0, 10.0, 101, [](double x) { return x; });
  const auto spec = make_basis(BasisFamily::Chebyshev, 4, 0.0, 10.0);
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  CHECK(ms.dfq[0] == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(ms.dfq_byparts[0] == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("telescoping invariants hold on an irregular random sample") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> gap(1e-3, 0.3), val(-2.0, 2.0);
  Timeserie ts;
  double x = 0.0;
  for (int i = 0; i < 400; ++i) {
    ts.xs.push_back(x);
    ts.fs.push_back(val(rng));
    x += gap(rng);
  }
  const auto spec = make_basis(BasisFamily::Legendre, 10, ts.xs.front(), ts.xs.back());
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  CHECK(ms.q[0] ==
        doctest::Approx(ts.xs.back() - ts.xs.front()).epsilon(1e-12));
  CHECK(ms.dfq[0] ==
        doctest::Approx(ts.fs.back() - ts.fs.front()).epsilon(1e-12).scale(1.0));
  CHECK(ms.dfq_byparts[0] ==
        doctest::Approx(ts.fs.back() - ts.fs.front()).epsilon(1e-12).scale(1.0));
}

TEST_CASE("analytic q moments match the closed-form integral over the domain") {
  const auto ts = gen_runge(2001);
  const auto spec = make_basis(BasisFamily::Chebyshev, 7, -1.0, 1.0);
  const auto ms = compute_moments(ts, spec, DxMode::AnalyticalDX);
  for (int k = 0; k < 13; ++k) {
    const double oracle = oracles::integrate(
        [&](double t) { return eval_basis_canonical(spec.family, k, t); }, -1.0, 1.0, 1e-13);
    CHECK(ms.q[k] == doctest::Approx(oracle).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("runge sample moments track the quadrature oracle to 1e-4") {
  const auto ts = gen_runge(2001);
  const auto spec = make_basis(BasisFamily::Chebyshev, 7, -1.0, 1.0);
  const auto ms = compute_moments(ts, spec, DxMode::AnalyticalDX);
  for (int k = 0; k < 13; ++k) {
    const double fq_oracle = oracles::integrate(
        [&](double t) { return runge(t) * eval_basis_canonical(spec.family, k, t); }, -1.0, 1.0,
        1e-13);
    CHECK(std::abs(ms.fq[k] - fq_oracle) < 1e-4);
  }
}

TEST_CASE("build_matrix(Q) under the analytic measure on [-1,1]") {
  const auto ts = gen_runge(101);
  const auto spec = make_basis(BasisFamily::Chebyshev, 4, -1.0, 1.0);
  const auto ms = compute_moments(ts, spec, DxMode::AnalyticalDX);
  const auto gram = build_matrix(ms, MomentKind::Q, 4);
  CHECK(gram(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gram(0, 1) == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
}

TEST_CASE("constant f: FQ matrix is c times the Gram matrix") {
  const auto ts = uniform_series(0.0, 5.0, 301, [](double) { return 2.5; });
  const auto spec = make_basis(BasisFamily::Chebyshev, 10, 0.0, 5.0);
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  const auto gram = build_matrix(ms, MomentKind::Q, 10);
  const auto fqm = build_matrix(ms, MomentKind::FQ, 10);
  for (int j = 0; j < 10; ++j)
    for (int k = 0; k < 10; ++k)
      CHECK(fqm(j, k) == doctest::Approx(2.5 * gram(j, k)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("moment lift equals the direct double-sum assembly") {
  const auto ts = gen_two_stage({{-0.01, -0.1}, {10.0, 10.0}, 0.02, StageKind::LinearDecay});
  for (auto family : {BasisFamily::Chebyshev, BasisFamily::Legendre}) {
    for (int n : {8, 30}) {
      const auto spec = make_basis(family, n, ts.xs.front(), ts.xs.back());
      const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
      const struct {
        MomentKind kind;
        oracles::Weighting w;
      } cases[] = {{MomentKind::Q, oracles::Weighting::Measure},
                   {MomentKind::FQ, oracles::Weighting::Value},
                   {MomentKind::DFQ, oracles::Weighting::Difference},
                   {MomentKind::XQ, oracles::Weighting::Position}};
      for (const auto& c : cases) {
        const auto lifted = build_matrix(ms, c.kind, n);
        const auto direct = oracles::double_sum_matrix(ts, spec, c.w, n);
        const double scale = frobenius_norm(direct);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            CHECK(std::abs(lifted(j, k) - direct(j, k)) < 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("build_matrix output is exactly symmetric") {
  const auto ts = gen_two_stage({{-0.01, -0.1}, {15.0, 5.0}, 0.05, StageKind::LinearDecay});
  const auto spec = make_basis(BasisFamily::Chebyshev, 20, ts.xs.front(), ts.xs.back());
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  for (auto kind : {MomentKind::Q, MomentKind::FQ, MomentKind::DFQ, MomentKind::DFQByParts,
                    MomentKind::XQ})
    CHECK(max_abs_offdiag_gap(build_matrix(ms, kind, 20)) == 0.0);
}

TEST_CASE("Gram matrix is positive definite when the sample has enough distinct points") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> gap(1e-4, 1.0), val(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 9;
    Timeserie ts;
    double x = 0.0;
    for (int i = 0; i < n + 2; ++i) {
      ts.xs.push_back(x);
      ts.fs.push_back(val(rng));
      x += gap(rng);
    }
    const auto spec = make_basis(BasisFamily::Chebyshev, n, ts.xs.front(), ts.xs.back());
    const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
    CHECK(cholesky(build_matrix(ms, MomentKind::Q, n)).has_value());
  }
}

TEST_CASE("direct and by-parts derivative moments agree on dense smooth data") {
  const auto dense = gen_runge(4001);
  const auto spec = make_basis(BasisFamily::Chebyshev, 7, -1.0, 1.0);
  const auto fine = compute_moments(dense, spec, DxMode::SampleDX);
  const double fine_gap = byparts_discrepancy(fine, 7);
  CHECK(fine_gap < 5e-3);

  const auto coarse_ts = gen_runge(81);
  const auto coarse = compute_moments(coarse_ts, spec, DxMode::SampleDX);
  const double coarse_gap = byparts_discrepancy(coarse, 7);
  CHECK(coarse_gap > fine_gap);  // the report grows as sampling degrades
}

TEST_CASE("input validation") {
  const auto spec = make_basis(BasisFamily::Chebyshev, 3, 0.0, 1.0);
  Timeserie short_ts{{0.0}, {1.0}};
  CHECK_THROWS_AS(compute_moments(short_ts, spec, DxMode::SampleDX), InputError);

  Timeserie decreasing{{0.0, 1.0, 0.5}, {1.0, 2.0, 3.0}};
  CHECK_THROWS_AS(compute_moments(decreasing, spec, DxMode::SampleDX), InputError);

  Timeserie bad{{0.0, 1.0}, {1.0, std::nan("")}};
  CHECK_THROWS_AS(compute_moments(bad, spec, DxMode::SampleDX), InputError);

  CHECK_THROWS_AS(make_basis(BasisFamily::Chebyshev, 151, 0.0, 1.0), InputError);
}

TEST_CASE("build_matrix dimension guard") {
  const auto ts = gen_runge(101);
  const auto spec = make_basis(BasisFamily::Chebyshev, 5, -1.0, 1.0);
  const auto ms = compute_moments(ts, spec, DxMode::SampleDX);
  CHECK_THROWS_AS(build_matrix(ms, MomentKind::Q, 6), InputError);
  CHECK_NOTHROW(build_matrix(ms, MomentKind::XQ, 5));
}
