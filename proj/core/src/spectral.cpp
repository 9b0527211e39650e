#include "gromov/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace gromov {

namespace {

Eigen::VectorXd eigenvalues(const Matrix& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw StructuralError("eigenvalues of a non-square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
  return solver.eigenvalues();
}

}  // namespace

double lambda_min(const Matrix& matrix) {
  if (matrix.rows() == 0) throw StructuralError("empty matrix");
  return eigenvalues(matrix).minCoeff();
}

double lambda_min(const GromovMatrix& matrix) {
  return lambda_min(matrix.entries());
}

double spectral_norm(const Matrix& matrix) {
  if (matrix.rows() == 0) return 0.0;
  const auto values = eigenvalues(matrix);
  return std::max(std::abs(values.minCoeff()), std::abs(values.maxCoeff()));
}

double lemma_a1_lambda_min(std::size_t n, double alpha) {
  if (n < 2) throw Error("lemma_a1_lambda_min needs n >= 2");
  const double m = static_cast<double>(n);
  const double d = m - alpha;
  return (d - std::sqrt(d * d + 4.0 * (m - 1.0) * alpha)) / 2.0;
}

Matrix ones_with_corner(std::size_t n, double alpha) {
  const auto size = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Ones(size, size);
  if (size > 0) m(size - 1, size - 1) = 1.0 - alpha;
  return m;
}

}  // namespace gromov
