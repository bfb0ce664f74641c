#include "rnspectra/basis.hpp"

#include <cmath>
#include <string>

#include "rnspectra/errors.hpp"

namespace rnspectra {

const char* to_string(BasisFamily family) {
  switch (family) {
    case BasisFamily::Chebyshev: return "chebyshev";
    case BasisFamily::Legendre: return "legendre";
    case BasisFamily::Monomial: return "monomial";
  }
  return "?";
}

void BasisSpec::validate() const {
  if (n < 1) throw InputError("basis dimension n must be >= 1");
  if (n > max_dimension())
    throw InputError("basis dimension n=" + std::to_string(n) + " exceeds the " +
                     std::to_string(max_dimension()) + " cap for 64-bit floats");
  if (!(domain.x_lo < domain.x_hi) || !std::isfinite(domain.x_lo) || !std::isfinite(domain.x_hi))
    throw InputError("domain map requires finite x_lo < x_hi");
}

BasisSpec make_basis(BasisFamily family, int n, double x_lo, double x_hi) {
  BasisSpec spec{family, n, DomainMap{x_lo, x_hi}};
  spec.validate();
  return spec;
}

double eval_basis_canonical(BasisFamily family, int k, double t) {
  if (k < 0) throw InputError("basis index must be >= 0");
  if (!std::isfinite(t)) throw InputError("basis evaluation point must be finite");
  if (k == 0) return 1.0;
  switch (family) {
    case BasisFamily::Chebyshev: {
      double prev = 1.0, cur = t;
      for (int i = 2; i <= k; ++i) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
      }
      return cur;
    }
    case BasisFamily::Legendre: {
      double prev = 1.0, cur = t;
      for (int i = 1; i < k; ++i) {
        const double next = ((2 * i + 1) * t * cur - i * prev) / (i + 1);
        prev = cur;
        cur = next;
      }
      return cur;
    }
    case BasisFamily::Monomial: {
      double v = t;
      for (int i = 1; i < k; ++i) v *= t;
      return v;
    }
  }
  return 0.0;
}

double eval_basis_deriv_canonical(BasisFamily family, int k, double t) {
  if (k < 0) throw InputError("basis index must be >= 0");
  if (k == 0) return 0.0;
  switch (family) {
    case BasisFamily::Chebyshev: {
      // T_k' = k U_{k-1}
      if (k == 1) return 1.0;
      double prev = 1.0, cur = 2.0 * t;  // U_0, U_1
      for (int i = 2; i < k; ++i) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
      }
      return k * cur;
    }
    case BasisFamily::Legendre: {
      // P'_{i+1} = P'_{i-1} + (2i+1) P_i
      double p_prev = 1.0, p_cur = t;    // P_0, P_1
      double d_prev = 0.0, d_cur = 1.0;  // P_0', P_1'
      for (int i = 1; i < k; ++i) {
        const double d_next = d_prev + (2 * i + 1) * p_cur;
        const double p_next = ((2 * i + 1) * t * p_cur - i * p_prev) / (i + 1);
        d_prev = d_cur;
        d_cur = d_next;
        p_prev = p_cur;
        p_cur = p_next;
      }
      return d_cur;
    }
    case BasisFamily::Monomial:
      return k * eval_basis_canonical(family, k - 1, t);
  }
  return 0.0;
}

std::vector<double> basis_row_canonical(BasisFamily family, int count, double t) {
  if (!std::isfinite(t)) throw InputError("basis evaluation point must be finite");
  std::vector<double> row(count);
  if (count == 0) return row;
  row[0] = 1.0;
  if (count == 1) return row;
  row[1] = t;
  switch (family) {
    case BasisFamily::Chebyshev:
      for (int k = 2; k < count; ++k) row[k] = 2.0 * t * row[k - 1] - row[k - 2];
      break;
    case BasisFamily::Legendre:
      for (int k = 2; k < count; ++k)
        row[k] = ((2 * k - 1) * t * row[k - 1] - (k - 1) * row[k - 2]) / k;
      break;
    case BasisFamily::Monomial:
      for (int k = 2; k < count; ++k) row[k] = t * row[k - 1];
      break;
  }
  return row;
}

double eval_basis(const BasisSpec& spec, int k, double x) {
  if (!std::isfinite(x)) throw InputError("basis evaluation point must be finite");
  return eval_basis_canonical(spec.family, k, spec.domain.to_canonical(x));
}

namespace {

// a_t = (2t-1)!!/t!, the half-integer ratios of the Neumann-Adams
// linearization of Legendre products.
std::vector<double> adams_ratios(int count) {
  std::vector<double> a(count + 1);
  a[0] = 1.0;
  for (int t = 1; t <= count; ++t) a[t] = a[t - 1] * (2.0 * t - 1.0) / t;
  return a;
}

}  // namespace

ProductExpansion product_coeffs(const BasisSpec& spec, int j, int k) {
  if (j < 0 || k < 0) throw InputError("basis indices must be >= 0");
  if (j + k + 1 > 2 * spec.n)
    throw InputError("product Q_" + std::to_string(j) + " Q_" + std::to_string(k) +
                     " expands beyond the 2n moments available at n=" + std::to_string(spec.n));
  ProductExpansion pe{j, k, std::vector<double>(j + k + 1, 0.0)};
  switch (spec.family) {
    case BasisFamily::Chebyshev:
      // T_j T_k = (T_{j+k} + T_{|j-k|}) / 2
      pe.coeffs[j + k] += 0.5;
      pe.coeffs[std::abs(j - k)] += 0.5;
      break;
    case BasisFamily::Monomial:
      pe.coeffs[j + k] = 1.0;
      break;
    case BasisFamily::Legendre: {
      const auto a = adams_ratios(j + k);
      const int tmax = std::min(j, k);
      for (int t = 0; t <= tmax; ++t) {
        const double num = a[t] * a[j - t] * a[k - t];
        const double c = num / a[j + k - t] * (2.0 * (j + k) - 4.0 * t + 1.0) /
                         (2.0 * (j + k) - 2.0 * t + 1.0);
        pe.coeffs[j + k - 2 * t] = c;
      }
      break;
    }
  }
  return pe;
}

std::vector<double> derivative_coeffs(BasisFamily family, int k) {
  if (k < 0) throw InputError("basis index must be >= 0");
  std::vector<double> d(static_cast<size_t>(std::max(k, 0)), 0.0);
  switch (family) {
    case BasisFamily::Chebyshev:
      // T_k' = 2k (T_{k-1} + T_{k-3} + ...), T_0 taken with weight 1/2
      for (int m = k - 1; m >= 0; m -= 2) d[m] = (m == 0) ? k : 2.0 * k;
      break;
    case BasisFamily::Legendre:
      // P_k' = sum over m = k-1, k-3, ... of (2m+1) P_m
      for (int m = k - 1; m >= 0; m -= 2) d[m] = 2.0 * m + 1.0;
      break;
    case BasisFamily::Monomial:
      if (k >= 1) d[k - 1] = k;
      break;
  }
  return d;
}

double analytic_integral(BasisFamily family, int k) {
  if (k < 0) throw InputError("basis index must be >= 0");
  if (k % 2 == 1) return 0.0;  // all three families are even/odd in k
  switch (family) {
    case BasisFamily::Chebyshev:
      return 2.0 / (1.0 - static_cast<double>(k) * k);
    case BasisFamily::Legendre:
      return k == 0 ? 2.0 : 0.0;
    case BasisFamily::Monomial:
      return 2.0 / (k + 1.0);
  }
  return 0.0;
}

}  // namespace rnspectra
