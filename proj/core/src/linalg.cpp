#include "rnspectra/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rnspectra/errors.hpp"

namespace rnspectra {

std::optional<Matrix> cholesky(const Matrix& m, double pivot_rel_tol) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, m(i, i));
  if (!(max_diag > 0.0)) return std::nullopt;
  const double pivot_tol = pivot_rel_tol * max_diag;

  Matrix lower(n, n);
  for (int j = 0; j < n; ++j) {
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
    if (!(d > pivot_tol)) return std::nullopt;
    const double ljj = std::sqrt(d);
    lower(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
      lower(i, j) = s / ljj;
    }
  }
  return lower;
}

std::vector<double> forward_substitute(const Matrix& lower, std::span<const double> b) {
  const int n = lower.rows();
  assert(b.size() == static_cast<size_t>(n));
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= lower(i, k) * y[k];
    y[i] = s / lower(i, i);
  }
  return y;
}

std::vector<double> back_substitute_transposed(const Matrix& lower, std::span<const double> b) {
  const int n = lower.rows();
  assert(b.size() == static_cast<size_t>(n));
  std::vector<double> y(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= lower(k, i) * y[k];
    y[i] = s / lower(i, i);
  }
  return y;
}

GramSolver::GramSolver(Matrix gram) : gram_(std::move(gram)) {
  auto l = cholesky(gram_);
  if (!l) throw NumericError("Gram matrix is not positive definite");
  lower_ = std::move(*l);
}

std::vector<double> GramSolver::solve(std::span<const double> rhs) const {
  return back_substitute_transposed(lower_, forward_substitute(lower_, rhs));
}

std::vector<double> solve_gram(const Matrix& gram, std::span<const double> rhs) {
  return GramSolver(gram).solve(rhs);
}

namespace {

// Cyclic Jacobi with rotations applied until the off-diagonal mass is at
// roundoff relative to the matrix norm.
void jacobi_eigen(const Matrix& in, std::vector<double>& values, Matrix& vectors) {
  const int n = in.rows();
  Matrix a = in;
  Matrix v = Matrix::identity(n);
  const double norm = std::max(frobenius_norm(a), std::numeric_limits<double>::min());
  const double stop = 1e-15 * norm;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    off = std::sqrt(2.0 * off);
    if (off <= stop) break;
    if (sweep == 99) throw NumericError("Jacobi eigensolver failed to converge");

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-20 * norm) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(p, r) = a(r, p);
          a(r, q) = s * arp + c * arq;
          a(q, r) = a(r, q);
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  values.resize(n);
  for (int i = 0; i < n; ++i) values[i] = a(i, i);
  vectors = std::move(v);
}

// Householder reduction to tridiagonal form with accumulated transforms,
// followed by implicit-shift QL on the tridiagonal pair (d, e).
void householder_tridiag(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
  const int n = a.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[i] = a(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          a(j, i) = a(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[j] = g / h;
          f += e[j] * a(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }

  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (int j = 0; j < i; ++j) {
        double g = 0.0;
        for (int k = 0; k < i; ++k) g += a(i, k) * a(k, j);
        for (int k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
      }
    }
    d[i] = a(i, i);
    a(i, i) = 1.0;
    for (int j = 0; j < i; ++j) a(j, i) = a(i, j) = 0.0;
  }
}

void tridiag_ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 50) throw NumericError("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void sort_ascending(std::vector<double>& values, Matrix& vectors) {
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] < values[b]; });
  std::vector<double> sorted_vals(n);
  Matrix sorted_vecs(n, n);
  for (int i = 0; i < n; ++i) {
    sorted_vals[i] = values[order[i]];
    for (int r = 0; r < n; ++r) sorted_vecs(r, i) = vectors(r, order[i]);
  }
  values = std::move(sorted_vals);
  vectors = std::move(sorted_vecs);
}

}  // namespace

void eigen_symmetric(const Matrix& a, std::vector<double>& values, Matrix& vectors,
                     EigenMethod method) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  if (n == 0) {
    values.clear();
    vectors = Matrix();
    return;
  }
  if (method == EigenMethod::Auto)
    method = n <= 64 ? EigenMethod::Jacobi : EigenMethod::TridiagonalQL;

  if (method == EigenMethod::Jacobi) {
    jacobi_eigen(a, values, vectors);
  } else {
    Matrix work = a;
    std::vector<double> e;
    householder_tridiag(work, values, e);
    tridiag_ql_implicit(values, e, work);
    vectors = std::move(work);
  }
  sort_ascending(values, vectors);
}

Spectrum solve_gep(const OperatorPair& pair) {
  const int n = pair.mL.rows();
  if (pair.mL.cols() != n || pair.mR.rows() != n || pair.mR.cols() != n)
    throw InputError("operator pair dimensions do not match");

  const auto nan = std::numeric_limits<double>::quiet_NaN();
  auto lopt = cholesky(pair.mR);
  if (!lopt) {
    Spectrum sp{std::vector<double>(n, nan), Matrix(n, n, nan), true};
    return sp;
  }
  const Matrix& lower = *lopt;

  // B = L^-1 mL L^-T, solved column by column against mL then its transpose.
  Matrix b(n, n);
  {
    Matrix y(n, n);  // y = L^-1 mL
    std::vector<double> col(n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) col[i] = pair.mL(i, j);
      const auto sol = forward_substitute(lower, col);
      for (int i = 0; i < n; ++i) y(i, j) = sol[i];
    }
    for (int i = 0; i < n; ++i) {
      const auto sol = forward_substitute(lower, y.row(i));  // row of y = column of y^T
      for (int j = 0; j < n; ++j) b(j, i) = sol[j];          // b = (L^-1 y^T)^T
    }
    b.symmetrize();
  }

  std::vector<double> lambdas;
  Matrix vecs;
  eigen_symmetric(b, lambdas, vecs);

  // Back-transform, mR-normalize and fix the sign of each eigenvector.
  Matrix alphas(n, n);
  std::vector<double> col(n);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) col[r] = vecs(r, i);
    auto alpha = back_substitute_transposed(lower, col);
    const double norm2 = quad_form(pair.mR, alpha);
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& v : alpha) v *= inv;
    }
    int imax = 0;
    for (int r = 1; r < n; ++r)
      if (std::abs(alpha[r]) > std::abs(alpha[imax])) imax = r;
    if (alpha[imax] < 0.0)
      for (double& v : alpha) v = -v;
    for (int r = 0; r < n; ++r) alphas(i, r) = alpha[r];
  }

  return Spectrum{std::move(lambdas), std::move(alphas), false};
}

}  // namespace rnspectra
