#pragma once

#include <span>
#include <vector>

#include "rnspectra/basis.hpp"
#include "rnspectra/linalg.hpp"
#include "rnspectra/matrix.hpp"

namespace rnspectra {

/// Coefficients of the state localized at x = y:
/// psi_y(x) = sum_i Q_i(x) (G^-1)_ij Q_j(y).
std::vector<double> psi_localized(const GramSolver& gram, const BasisSpec& spec, double y);

/// Christoffel function from a spectrum whose right-hand matrix is the Gram:
/// 1 / sum_i psi_i(y)^2. Requires a non-defective spectrum (NaN otherwise).
double christoffel(const Spectrum& sp, const BasisSpec& spec, double y);

/// Christoffel function as 1 / psi_y(y), the direct quadratic-form route.
double christoffel_direct(const GramSolver& gram, const BasisSpec& spec, double y);

/// Radon-Nikodym interpolation: ratio of the two quadratic forms of the
/// localized state against gMatrix = <Q_j g Q_k> and the Gram.
double rn_interpolate(const Matrix& g_matrix, const GramSolver& gram, const BasisSpec& spec,
                      double y);

/// Least squares interpolation sum_ij Q_i(y) (G^-1)_ij <g Q_j> from the
/// first n moments of g.
double ls_interpolate(std::span<const double> g_moments, const GramSolver& gram,
                      const BasisSpec& spec, double y);

/// The same two interpolations written in the eigenbasis of the pencil;
/// identical to the direct forms up to arithmetic precision, so a
/// disagreement flags numerical instability. NaN on a defective spectrum.
double spectrum_rn_interpolate(const Spectrum& sp, const BasisSpec& spec, double y);
double spectrum_ls_interpolate(const Spectrum& sp, std::span<const double> q,
                               const BasisSpec& spec, double y);

/// n-point Lebesgue quadrature of the observable behind a spectrum: the
/// value-nodes are the eigenvalues, the weight of node i is <psi_i>^2 and
/// x_estimates locate each state as <psi_i^2 x>/<psi_i^2>.
struct LebesgueQuadrature {
  std::vector<double> value_nodes;
  std::vector<double> weights;
  std::vector<double> x_estimates;
};

LebesgueQuadrature lebesgue_quadrature(const Spectrum& sp, std::span<const double> q,
                                       const Matrix& x_matrix, const Matrix& gram);

/// n-point Gauss quadrature of the sample measure, from the pencil
/// (<Q_j x Q_k>, <Q_j Q_k>). Nodes are reported in raw x units.
struct GaussQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussQuadrature gauss_quadrature(const Matrix& x_matrix, const Matrix& gram,
                                 std::span<const double> q);

/// Two-state skewness-like estimator from the six moments
/// <Q_0..2> and <g Q_0..2>: (2 gbar - lambda_min - lambda_max) /
/// (lambda_min - lambda_max). Throws NumericError for a degenerate
/// (constant-g) or indefinite 2x2 pencil.
double skewness_estimator(std::span<const double, 3> q3, std::span<const double, 3> gq3,
                          BasisFamily family);

}  // namespace rnspectra
