#include "rnspectra/matrix.hpp"

#include <cassert>
#include <cmath>

namespace rnspectra {

void Matrix::symmetrize() {
  assert(rows_ == cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      const double v = 0.5 * ((*this)(i, j) + (*this)(j, i));
      (*this)(i, j) = v;
      (*this)(j, i) = v;
    }
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  assert(static_cast<size_t>(a.cols()) == x.size());
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

double bilinear_form(std::span<const double> x, const Matrix& a, std::span<const double> y) {
  assert(a.rows() == a.cols());
  assert(x.size() == static_cast<size_t>(a.rows()) && y.size() == x.size());
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i) s += x[i] * dot(a.row(i), y);
  return s;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (double v : a.row(i)) s += v * v;
  return std::sqrt(s);
}

double max_abs_offdiag_gap(const Matrix& a) {
  double g = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) g = std::max(g, std::abs(a(i, j) - a(j, i)));
  return g;
}

}  // namespace rnspectra
