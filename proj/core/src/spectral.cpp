#include "rnspectra/spectral.hpp"

#include <cmath>
#include <limits>

#include "rnspectra/errors.hpp"

namespace rnspectra {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// psi_i(y) for every eigenstate: alphas * Q-row(y).
std::vector<double> eigenstates_at(const Spectrum& sp, const BasisSpec& spec, double y) {
  const auto row = basis_row_canonical(spec.family, sp.n(), spec.domain.to_canonical(y));
  std::vector<double> psi(sp.n());
  for (int i = 0; i < sp.n(); ++i) psi[i] = dot(sp.alphas.row(i), row);
  return psi;
}
}  // namespace

std::vector<double> psi_localized(const GramSolver& gram, const BasisSpec& spec, double y) {
  const auto row = basis_row_canonical(spec.family, gram.n(), spec.domain.to_canonical(y));
  return gram.solve(row);
}

double christoffel(const Spectrum& sp, const BasisSpec& spec, double y) {
  if (sp.defective) return kNaN;
  const auto psi = eigenstates_at(sp, spec, y);
  return 1.0 / dot(psi, psi);
}

double christoffel_direct(const GramSolver& gram, const BasisSpec& spec, double y) {
  const auto row = basis_row_canonical(spec.family, gram.n(), spec.domain.to_canonical(y));
  return 1.0 / dot(row, gram.solve(row));
}

double rn_interpolate(const Matrix& g_matrix, const GramSolver& gram, const BasisSpec& spec,
                      double y) {
  const auto row = basis_row_canonical(spec.family, gram.n(), spec.domain.to_canonical(y));
  const auto c = gram.solve(row);
  // c^T G c collapses to c . row since G c = row.
  return quad_form(g_matrix, c) / dot(c, row);
}

double ls_interpolate(std::span<const double> g_moments, const GramSolver& gram,
                      const BasisSpec& spec, double y) {
  const auto row = basis_row_canonical(spec.family, gram.n(), spec.domain.to_canonical(y));
  return dot(row, gram.solve(g_moments));
}

double spectrum_rn_interpolate(const Spectrum& sp, const BasisSpec& spec, double y) {
  if (sp.defective) return kNaN;
  const auto psi = eigenstates_at(sp, spec, y);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < sp.n(); ++i) {
    const double p2 = psi[i] * psi[i];
    num += sp.lambdas[i] * p2;
    den += p2;
  }
  return num / den;
}

double spectrum_ls_interpolate(const Spectrum& sp, std::span<const double> q,
                               const BasisSpec& spec, double y) {
  if (sp.defective) return kNaN;
  const auto psi = eigenstates_at(sp, spec, y);
  double s = 0.0;
  for (int i = 0; i < sp.n(); ++i) {
    const double mean_psi = dot(sp.alphas.row(i), q.first(sp.n()));
    s += sp.lambdas[i] * psi[i] * mean_psi;
  }
  return s;
}

LebesgueQuadrature lebesgue_quadrature(const Spectrum& sp, std::span<const double> q,
                                       const Matrix& x_matrix, const Matrix& gram) {
  const int n = sp.n();
  LebesgueQuadrature lq{std::vector<double>(n, kNaN), std::vector<double>(n, kNaN),
                        std::vector<double>(n, kNaN)};
  if (sp.defective) return lq;
  for (int i = 0; i < n; ++i) {
    const auto alpha = sp.alphas.row(i);
    const double mean_psi = dot(alpha, q.first(n));
    lq.value_nodes[i] = sp.lambdas[i];
    lq.weights[i] = mean_psi * mean_psi;
    lq.x_estimates[i] = quad_form(x_matrix, alpha) / quad_form(gram, alpha);
  }
  return lq;
}

GaussQuadrature gauss_quadrature(const Matrix& x_matrix, const Matrix& gram,
                                 std::span<const double> q) {
  OperatorPair pair{x_matrix, gram, PairLabel::Position};
  const Spectrum sp = solve_gep(pair);
  if (sp.defective) throw NumericError("Gauss quadrature needs a positive definite Gram matrix");
  GaussQuadrature gq{sp.lambdas, std::vector<double>(sp.n())};
  for (int i = 0; i < sp.n(); ++i) {
    const double mean_psi = dot(sp.alphas.row(i), q.first(sp.n()));
    gq.weights[i] = mean_psi * mean_psi;
  }
  return gq;
}

double skewness_estimator(std::span<const double, 3> q3, std::span<const double, 3> gq3,
                          BasisFamily family) {
  for (int i = 0; i < 3; ++i)
    if (!std::isfinite(q3[i]) || !std::isfinite(gq3[i]))
      throw InputError("skewness estimator needs six finite moments");

  // Lift the six moments to the 2x2 pencil and solve its characteristic
  // quadratic det(L - lambda R) = 0 directly.
  BasisSpec spec{family, 2, DomainMap{}};
  double l_mat[2][2], r_mat[2][2];
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const auto pe = product_coeffs(spec, j, k);
      double lv = 0.0, rv = 0.0;
      for (int m = 0; m <= j + k; ++m) {
        lv += pe.coeffs[m] * gq3[m];
        rv += pe.coeffs[m] * q3[m];
      }
      l_mat[j][k] = lv;
      r_mat[j][k] = rv;
    }
  }

  const double det_r = r_mat[0][0] * r_mat[1][1] - r_mat[0][1] * r_mat[1][0];
  if (!(r_mat[0][0] > 0.0) || !(det_r > 0.0))
    throw NumericError("skewness estimator: 2x2 measure matrix is not positive definite");

  const double a = det_r;
  const double b = -(l_mat[0][0] * r_mat[1][1] + l_mat[1][1] * r_mat[0][0] -
                     l_mat[0][1] * r_mat[1][0] - l_mat[1][0] * r_mat[0][1]);
  const double c = l_mat[0][0] * l_mat[1][1] - l_mat[0][1] * l_mat[1][0];
  const double disc = std::max(b * b - 4.0 * a * c, 0.0);
  const double sq = std::sqrt(disc);
  const double qq = -0.5 * (b + std::copysign(sq, b));
  double lo, hi;
  if (qq != 0.0) {
    lo = qq / a;
    hi = c / qq;
  } else {
    lo = hi = -b / (2.0 * a);
  }
  if (lo > hi) std::swap(lo, hi);

  const double spread = hi - lo;
  if (spread <= 1e-12 * std::max({std::abs(lo), std::abs(hi), 1e-300}))
    throw NumericError("skewness estimator: degenerate distribution (constant observable)");

  const double gbar = gq3[0] / q3[0];
  return (2.0 * gbar - lo - hi) / (lo - hi);
}

}  // namespace rnspectra
