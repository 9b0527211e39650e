#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gromov/matrix.hpp"
#include "gromov/tree.hpp"

namespace gromov {

struct ReconstructOptions {
  /// Base-set labels; defaults to v1..vn.
  std::vector<std::string> labels;
  std::string base_vertex = "s";
  /// Prefix for generated branch-point names.
  std::string internal_prefix = "_p";
  double eps = kTolerance;
};

/// Builds the canonical base of a Gromov matrix by inserting v_1, v_2, ... in
/// turn: v_n hangs off the path [s, v_j] at root distance M(j,n), where j is
/// the smallest index maximizing M(j,n). O(n^2) on top of validation.
Base reconstruct_tree(const GromovMatrix& matrix,
                      const ReconstructOptions& options = {});

/// Validates first; throws ValidationError carrying the violation.
Base reconstruct_tree(const Matrix& matrix,
                      const ReconstructOptions& options = {});

/// Adjacency of G_V: A(i,j) = 1 iff the tree path between v_i and v_j meets no
/// other base node. Decided from the matrix alone in O(n^3).
Eigen::MatrixXi gv_adjacency(const GromovMatrix& matrix,
                             double eps = kTolerance);

/// True iff v_k lies on the tree path [v_i, v_j]:
/// M(k,k) + M(i,j) = M(i,k) + M(k,j). Throws std::out_of_range.
bool on_path(const GromovMatrix& matrix, std::size_t k, std::size_t i,
             std::size_t j, double eps = kTolerance);

/// True iff v_k lies on the tree path [s, v_j]: M(k,j) = M(k,k).
bool on_path_from_base(const GromovMatrix& matrix, std::size_t k,
                       std::size_t j, double eps = kTolerance);

}  // namespace gromov
