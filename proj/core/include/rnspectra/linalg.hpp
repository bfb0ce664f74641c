#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rnspectra/matrix.hpp"
#include "rnspectra/moments.hpp"

namespace rnspectra {

/// Lower-triangular L with L L^T = m, or nullopt when a pivot falls below
/// pivot_rel_tol times the largest diagonal entry (indefinite input).
std::optional<Matrix> cholesky(const Matrix& m, double pivot_rel_tol = 1e-13);

std::vector<double> forward_substitute(const Matrix& lower, std::span<const double> b);
std::vector<double> back_substitute_transposed(const Matrix& lower, std::span<const double> b);

/// Solve gram * y = rhs through the Cholesky factor. Throws NumericError
/// when gram is not positive definite.
std::vector<double> solve_gram(const Matrix& gram, std::span<const double> rhs);

/// Cholesky-backed SPD solver that factors once and solves many times.
class GramSolver {
 public:
  explicit GramSolver(Matrix gram);  // throws NumericError if not SPD

  int n() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const Matrix& lower() const { return lower_; }
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  Matrix gram_;
  Matrix lower_;
};

enum class EigenMethod { Auto, Jacobi, TridiagonalQL };

/// Full eigen-decomposition of a symmetric matrix: a = V diag(values) V^T,
/// values ascending, eigenvectors in the columns of V (orthonormal).
/// Auto uses cyclic Jacobi up to n = 64 and Householder + implicit-shift QL above.
void eigen_symmetric(const Matrix& a, std::vector<double>& values, Matrix& vectors,
                     EigenMethod method = EigenMethod::Auto);

/// Solution of the generalized symmetric-definite eigenproblem
/// mL alpha = lambda mR alpha. Rows of `alphas` are the coefficient vectors
/// of the eigenfunctions psi_i in the Q basis, mR-orthonormal, lambdas
/// ascending. When mR is not positive definite the spectrum is `defective`
/// and every lambda (and alpha) is NaN.
struct Spectrum {
  std::vector<double> lambdas;
  Matrix alphas;
  bool defective = false;

  int n() const { return static_cast<int>(lambdas.size()); }
};

Spectrum solve_gep(const OperatorPair& pair);

}  // namespace rnspectra
