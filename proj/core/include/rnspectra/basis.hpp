#pragma once

#include <vector>

namespace rnspectra {

enum class BasisFamily { Chebyshev, Legendre, Monomial };

const char* to_string(BasisFamily family);

/// Affine map between the raw sample domain [x_lo, x_hi] and the canonical
/// domain [-1, 1]. Endpoints map to -1/+1 exactly (the canonical image is
/// evaluated as ((x - lo) + (x - hi)) / (hi - lo), which is exact at both
/// ends regardless of the magnitude of lo and hi).
struct DomainMap {
  double x_lo = -1.0;
  double x_hi = 1.0;

  double scale() const { return 2.0 / (x_hi - x_lo); }          // dt/dx
  double offset() const { return -(x_hi + x_lo) / (x_hi - x_lo); }
  double half_width() const { return 0.5 * (x_hi - x_lo); }     // dx/dt
  double center() const { return 0.5 * (x_hi + x_lo); }

  double to_canonical(double x) const { return ((x - x_lo) + (x - x_hi)) / (x_hi - x_lo); }
  double from_canonical(double t) const { return center() + half_width() * t; }
};

/// Which polynomial family, how many basis functions n, and the domain map.
/// All families are evaluated on the canonical domain [-1, 1].
struct BasisSpec {
  BasisFamily family = BasisFamily::Chebyshev;
  int n = 1;
  DomainMap domain;

  /// Throws InputError unless 1 <= n <= max_dimension() and x_lo < x_hi.
  void validate() const;

  /// Largest supported basis dimension with 64-bit floats.
  static constexpr int max_dimension() { return 150; }
};

BasisSpec make_basis(BasisFamily family, int n, double x_lo, double x_hi);

/// Q_k at the canonical image of raw x, via the family's three-term recurrence.
double eval_basis(const BasisSpec& spec, int k, double x);

/// Q_k(t) for canonical t.
double eval_basis_canonical(BasisFamily family, int k, double t);

/// dQ_k/dt at canonical t (recurrence-based, stable at t = +-1).
double eval_basis_deriv_canonical(BasisFamily family, int k, double t);

/// Q_0(t)..Q_{count-1}(t) in one recurrence pass.
std::vector<double> basis_row_canonical(BasisFamily family, int count, double t);
inline std::vector<double> basis_row(const BasisSpec& spec, int count, double x) {
  return basis_row_canonical(spec.family, count, spec.domain.to_canonical(x));
}

/// Q_j(t) Q_k(t) = sum_l coeffs[l] Q_l(t), coeffs has length j+k+1.
struct ProductExpansion {
  int j = 0;
  int k = 0;
  std::vector<double> coeffs;
};

/// Exact linearization coefficients of the basis product. Requires the
/// expansion to fit the 2n moment slots of the spec: j + k <= 2n - 1.
ProductExpansion product_coeffs(const BasisSpec& spec, int j, int k);

/// dQ_k/dt = sum_{m<k} coeffs[m] Q_m(t); returned vector has length k.
std::vector<double> derivative_coeffs(BasisFamily family, int k);

/// Integral of Q_k(t) dt over the canonical domain [-1, 1], in closed form.
double analytic_integral(BasisFamily family, int k);

}  // namespace rnspectra
