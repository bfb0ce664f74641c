#include "rnspectra/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rnspectra/errors.hpp"

namespace rnspectra {

const char* to_string(DxMode mode) {
  return mode == DxMode::SampleDX ? "sample" : "analytical";
}

const char* to_string(PairLabel label) {
  switch (label) {
    case PairLabel::Value: return "value";
    case PairLabel::Derivative: return "derivative";
    case PairLabel::DerivativeByParts: return "derivative_byparts";
    case PairLabel::RelaxRate: return "relax_rate";
    case PairLabel::Position: return "position";
  }
  return "?";
}

MomentSet compute_moments(const Timeserie& ts, const BasisSpec& spec, DxMode dx_mode) {
  ts.validate();
  spec.validate();

  const int m = 2 * spec.n;
  MomentSet ms{spec, dx_mode,
               std::vector<double>(m, 0.0), std::vector<double>(m, 0.0),
               std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};

  // Sums run from the second sample: the x_0, f_0 terms of the defining sums
  // are taken equal to x_1, f_1, so <Q_0> and <df/dx Q_0> telescope exactly.
  const size_t M = ts.size();
  for (size_t l = 1; l < M; ++l) {
    const double dx = ts.xs[l] - ts.xs[l - 1];
    const double df = ts.fs[l] - ts.fs[l - 1];
    const double f = ts.fs[l];
    const auto row = basis_row_canonical(spec.family, m, spec.domain.to_canonical(ts.xs[l]));
    for (int k = 0; k < m; ++k) {
      ms.q[k] += row[k] * dx;
      ms.fq[k] += row[k] * dx * f;
      ms.dfq[k] += row[k] * df;
    }
  }

  if (dx_mode == DxMode::AnalyticalDX) {
    const double half = spec.domain.half_width();
    for (int k = 0; k < m; ++k) ms.q[k] = half * analytic_integral(spec.family, k);
  }

  // <df/dx Q_k> = [f Q_k] - <f dQ_k/dx>, with dQ_k/dx expanded back into the
  // basis so the subtraction reuses the <f Q_m> sums.
  const double dt_dx = spec.domain.scale();
  const double t_first = spec.domain.to_canonical(ts.xs.front());
  const double t_last = spec.domain.to_canonical(ts.xs.back());
  const double f_first = ts.fs.front(), f_last = ts.fs.back();
  for (int k = 0; k < m; ++k) {
    const double q_at_hi = eval_basis_canonical(spec.family, k, t_last);
    const double q_at_lo = eval_basis_canonical(spec.family, k, t_first);
    const auto d = derivative_coeffs(spec.family, k);
    double s = 0.0;
    for (int mm = 0; mm < k; ++mm) s += d[mm] * ms.fq[mm];
    ms.dfq_byparts[k] = f_last * q_at_hi - f_first * q_at_lo - dt_dx * s;
  }

  return ms;
}

double byparts_discrepancy(const MomentSet& ms, int n) {
  if (n < 1 || static_cast<size_t>(n) > ms.dfq.size())
    throw InputError("byparts_discrepancy: n out of range");
  double gap = 0.0, scale = 0.0;
  for (int k = 0; k < n; ++k) {
    gap = std::max(gap, std::abs(ms.dfq[k] - ms.dfq_byparts[k]));
    scale = std::max(scale, std::abs(ms.dfq[k]));
  }
  return gap / (scale > 0.0 ? scale : 1.0);
}

namespace {

std::vector<double> synthesize_x_moments(const MomentSet& ms, int count) {
  // x = center + half_width * t and t = Q_1 for every family, so
  // <x Q_l> = center <Q_l> + half_width <Q_1 Q_l>.
  const double a = ms.spec.domain.center();
  const double b = ms.spec.domain.half_width();
  std::vector<double> xq(count, 0.0);
  for (int l = 0; l < count; ++l) {
    const auto pe = product_coeffs(ms.spec, 1, l);
    double t_moment = 0.0;
    for (int i = 0; i <= l + 1; ++i) t_moment += pe.coeffs[i] * ms.q[i];
    xq[l] = a * ms.q[l] + b * t_moment;
  }
  return xq;
}

}  // namespace

Matrix build_matrix(const MomentSet& ms, MomentKind kind, int n) {
  if (n < 1 || n > ms.spec.n)
    throw InputError("build_matrix: n=" + std::to_string(n) + " exceeds the moment set (n=" +
                     std::to_string(ms.spec.n) + ")");
  const std::vector<double>* mom = nullptr;
  std::vector<double> xq;
  switch (kind) {
    case MomentKind::Q: mom = &ms.q; break;
    case MomentKind::FQ: mom = &ms.fq; break;
    case MomentKind::DFQ: mom = &ms.dfq; break;
    case MomentKind::DFQByParts: mom = &ms.dfq_byparts; break;
    case MomentKind::XQ:
      xq = synthesize_x_moments(ms, 2 * n - 1);
      mom = &xq;
      break;
  }

  Matrix out(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      const auto pe = product_coeffs(ms.spec, j, k);
      double v = 0.0;
      for (int l = 0; l <= j + k; ++l) v += pe.coeffs[l] * (*mom)[l];
      out(j, k) = v;
      out(k, j) = v;
    }
  }
  return out;
}

OperatorPair make_operator_pair(const MomentSet& ms, PairLabel label, int n) {
  switch (label) {
    case PairLabel::Value:
      return {build_matrix(ms, MomentKind::FQ, n), build_matrix(ms, MomentKind::Q, n), label};
    case PairLabel::Derivative:
      return {build_matrix(ms, MomentKind::DFQ, n), build_matrix(ms, MomentKind::Q, n), label};
    case PairLabel::DerivativeByParts:
      return {build_matrix(ms, MomentKind::DFQByParts, n), build_matrix(ms, MomentKind::Q, n),
              label};
    case PairLabel::RelaxRate:
      return {build_matrix(ms, MomentKind::DFQ, n), build_matrix(ms, MomentKind::FQ, n), label};
    case PairLabel::Position:
      return {build_matrix(ms, MomentKind::XQ, n), build_matrix(ms, MomentKind::Q, n), label};
  }
  throw InputError("unknown pair label");
}

}  // namespace rnspectra
