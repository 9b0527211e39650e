#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gromov/error.hpp"

namespace gromov {

using Matrix = Eigen::MatrixXd;

/// Conditions a symmetric matrix must satisfy to be the Gromov matrix of a
/// weighted tree, in the order `validate` checks them.
enum class Condition {
  /// (a) entries non-negative, diagonal positive.
  kNonNegative,
  /// (b) M(i,i) >= M(i,j).
  kDiagonalDominant,
  /// (c) the two smallest of M(i,j), M(i,k), M(j,k) are equal.
  kThreePoint,
  /// Two base indices at tree distance zero, M(i,i) = M(j,j) = M(i,j). Such a
  /// matrix passes (a)-(c) but is singular and has no base with distinct
  /// vertices.
  kDistinctPoints,
};

const char* condition_name(Condition condition);

struct Violation {
  Condition condition;
  /// Zero-based witnessing indices: one index for a bad diagonal entry, two
  /// for a bad pair, three for a bad triple.
  std::vector<std::size_t> indices;

  /// Human-readable report with one-based indices.
  std::string message() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(Violation violation)
      : Error(violation.message()), violation_(std::move(violation)) {}

  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

/// Throws StructuralError unless `matrix` is square and symmetric within eps.
void require_symmetric(const Matrix& matrix, double eps = kTolerance);

/// Checks the Gromov conditions in order and reports the first failure.
/// Throws StructuralError for non-square or non-symmetric input.
std::optional<Violation> validate(const Matrix& matrix,
                                  double eps = kTolerance);

/// All index triples i < j < k whose two smallest off-diagonal products differ
/// by more than eps.
std::vector<std::array<std::size_t, 3>> check_three_point(
    const Matrix& matrix, double eps = kTolerance);

/// A symmetric matrix known to satisfy the Gromov conditions.
class GromovMatrix {
 public:
  /// Validates `entries`; throws ValidationError or StructuralError.
  explicit GromovMatrix(Matrix entries, double eps = kTolerance);

  /// Wraps a matrix produced by a construction that yields Gromov matrices by
  /// definition (tree products, build programs, G-convex combination).
  static GromovMatrix assume_valid(Matrix entries);

  Eigen::Index size() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  double operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_(i, j);
  }

  /// The diagonal part, itself a Gromov matrix (a star).
  GromovMatrix diagonal() const;

 private:
  struct Unchecked {};
  GromovMatrix(Matrix entries, Unchecked) : entries_(std::move(entries)) {}

  Matrix entries_;
};

bool approx_equal(const Matrix& a, const Matrix& b, double eps = kTolerance);

}  // namespace gromov
