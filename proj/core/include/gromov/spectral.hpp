#pragma once

#include <cstddef>

#include "gromov/matrix.hpp"

namespace gromov {

/// Smallest eigenvalue of a symmetric matrix.
double lambda_min(const Matrix& matrix);
double lambda_min(const GromovMatrix& matrix);

/// Largest absolute eigenvalue of a symmetric matrix (its 2-norm).
double spectral_norm(const Matrix& matrix);

/// Closed-form smallest eigenvalue of the n x n all-ones matrix whose
/// bottom-right entry is 1 - alpha. Throws Error for n < 2.
double lemma_a1_lambda_min(std::size_t n, double alpha);

/// The matrix described above.
Matrix ones_with_corner(std::size_t n, double alpha);

}  // namespace gromov
