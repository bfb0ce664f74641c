#pragma once

#include <span>
#include <vector>

namespace rnspectra {

/// Dense row-major matrix of doubles. Just enough surface for the
/// symmetric solvers in linalg.hpp; not a general linear-algebra type.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  std::span<double> row(int i) { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }
  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
  }

  /// Replace by (A + A^T)/2. Square matrices only.
  void symmetrize();

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
std::vector<double> matvec(const Matrix& a, std::span<const double> x);
/// x^T A y (A square, |x| = |y| = A.rows()).
double bilinear_form(std::span<const double> x, const Matrix& a, std::span<const double> y);
inline double quad_form(const Matrix& a, std::span<const double> x) { return bilinear_form(x, a, x); }

double frobenius_norm(const Matrix& a);
double max_abs_offdiag_gap(const Matrix& a);  // max |a_ij - a_ji|

}  // namespace rnspectra
