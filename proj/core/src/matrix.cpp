#include "gromov/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gromov {

const char* condition_name(Condition condition) {
  switch (condition) {
    case Condition::kNonNegative:
      return "condition (a): non-negative entries, positive diagonal";
    case Condition::kDiagonalDominant:
      return "condition (b): diagonal dominates its row";
    case Condition::kThreePoint:
      return "condition (c): three-point condition";
    case Condition::kDistinctPoints:
      return "distinct base points";
  }
  return "unknown condition";
}

std::string Violation::message() const {
  std::ostringstream out;
  out << "violation of " << condition_name(condition) << " at (";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out << ",";
    out << indices[i] + 1;
  }
  out << ")";
  return out.str();
}

void require_symmetric(const Matrix& matrix, double eps) {
  if (matrix.rows() != matrix.cols()) {
    throw StructuralError("matrix is not square (" +
                          std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()) + ")");
  }
  const Eigen::Index n = matrix.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!(std::abs(matrix(i, j) - matrix(j, i)) <= eps)) {
        throw StructuralError("matrix is not symmetric at (" +
                              std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
      }
    }
  }
}

namespace {

bool three_point_holds(double x, double y, double z, double eps) {
  std::array<double, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  return v[1] - v[0] <= eps;
}

}  // namespace

std::optional<Violation> validate(const Matrix& matrix, double eps) {
  require_symmetric(matrix, eps);
  const auto n = static_cast<std::size_t>(matrix.rows());
  const auto at = [&](std::size_t i, std::size_t j) {
    return matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (!(at(i, i) > 0.0)) return Violation{Condition::kNonNegative, {i}};
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) < -eps) return Violation{Condition::kNonNegative, {i, j}};
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && at(i, j) > at(i, i) + eps) {
        return Violation{Condition::kDiagonalDominant,
                         {std::min(i, j), std::max(i, j)}};
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!three_point_holds(at(i, j), at(i, k), at(j, k), eps)) {
          return Violation{Condition::kThreePoint, {i, j, k}};
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, i) + at(j, j) - 2.0 * at(i, j) <= eps) {
        return Violation{Condition::kDistinctPoints, {i, j}};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::array<std::size_t, 3>> check_three_point(const Matrix& matrix,
                                                          double eps) {
  require_symmetric(matrix, eps);
  std::vector<std::array<std::size_t, 3>> bad;
  const Eigen::Index n = matrix.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      for (Eigen::Index k = j + 1; k < n; ++k) {
        if (!three_point_holds(matrix(i, j), matrix(i, k), matrix(j, k),
                               eps)) {
          bad.push_back({static_cast<std::size_t>(i),
                         static_cast<std::size_t>(j),
                         static_cast<std::size_t>(k)});
        }
      }
    }
  }
  return bad;
}

GromovMatrix::GromovMatrix(Matrix entries, double eps)
    : entries_(std::move(entries)) {
  if (auto violation = validate(entries_, eps)) {
    throw ValidationError(std::move(*violation));
  }
}

GromovMatrix GromovMatrix::assume_valid(Matrix entries) {
  return GromovMatrix(std::move(entries), Unchecked{});
}

GromovMatrix GromovMatrix::diagonal() const {
  Matrix d = entries_.diagonal().asDiagonal();
  return GromovMatrix(std::move(d), Unchecked{});
}

bool approx_equal(const Matrix& a, const Matrix& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.size() == 0) return true;
  return (a - b).cwiseAbs().maxCoeff() <= eps;
}

}  // namespace gromov
