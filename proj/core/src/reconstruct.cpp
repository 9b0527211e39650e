#include "gromov/reconstruct.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace gromov {

namespace {

struct BuildNode {
  std::string name;
  std::size_t parent;
  double depth;
  bool terminal;
};

class NameSource {
 public:
  NameSource(std::string prefix, std::set<std::string> reserved)
      : prefix_(std::move(prefix)), reserved_(std::move(reserved)) {}

  std::string next() {
    std::string name;
    do {
      name = prefix_ + std::to_string(++counter_);
    } while (reserved_.count(name) > 0);
    return name;
  }

 private:
  std::string prefix_;
  std::set<std::string> reserved_;
  std::size_t counter_ = 0;
};

}  // namespace

Base reconstruct_tree(const GromovMatrix& matrix,
                      const ReconstructOptions& options) {
  const auto n = static_cast<std::size_t>(matrix.size());
  std::vector<std::string> labels = options.labels;
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back("v" + std::to_string(i + 1));
    }
  }
  if (labels.size() != n) {
    throw Error("reconstruct_tree: " + std::to_string(labels.size()) +
                " labels for a " + std::to_string(n) + "x" +
                std::to_string(n) + " matrix");
  }
  std::set<std::string> reserved(labels.begin(), labels.end());
  reserved.insert(options.base_vertex);
  NameSource fresh(options.internal_prefix, reserved);

  const double eps = options.eps;
  const auto m = [&](std::size_t i, std::size_t j) {
    return matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };

  std::vector<BuildNode> nodes{{options.base_vertex, kNoNode, 0.0, true}};
  std::vector<std::size_t> placed(n);

  for (std::size_t v = 0; v < n; ++v) {
    std::size_t anchor = 0;  // s
    std::size_t best = 0;
    double branch_depth = 0.0;
    if (v > 0) {
      for (std::size_t i = 1; i < v; ++i) {
        if (m(i, v) > m(best, v)) best = i;
      }
      branch_depth = std::max(0.0, m(best, v));
      // Find or create the point at root distance branch_depth on [s, v_best].
      std::size_t x = placed[best];
      if (std::abs(nodes[x].depth - branch_depth) <= eps) {
        anchor = x;
      } else {
        while (true) {
          const std::size_t y = nodes[x].parent;
          if (std::abs(nodes[y].depth - branch_depth) <= eps) {
            anchor = y;
            break;
          }
          if (nodes[y].depth < branch_depth) {
            anchor = nodes.size();
            nodes.push_back({fresh.next(), y, branch_depth, false});
            nodes[x].parent = anchor;
            break;
          }
          x = y;
        }
      }
    }

    const double depth = m(v, v);
    if (depth - nodes[anchor].depth > eps) {
      placed[v] = nodes.size();
      nodes.push_back({labels[v], anchor, depth, true});
    } else {
      if (nodes[anchor].terminal) {
        // Zero distance to s or to an earlier base node.
        if (anchor == 0) throw ValidationError({Condition::kNonNegative, {v}});
        throw ValidationError({Condition::kDistinctPoints, {best, v}});
      }
      nodes[anchor].name = labels[v];
      nodes[anchor].terminal = true;
      placed[v] = anchor;
    }
  }

  std::vector<TreeEdge> edges;
  edges.reserve(nodes.size());
  for (std::size_t x = 1; x < nodes.size(); ++x) {
    const auto& node = nodes[x];
    edges.push_back({nodes[node.parent].name, node.name,
                     node.depth - nodes[node.parent].depth});
  }
  WeightedTree tree(std::move(edges), {options.base_vertex});
  return Base(std::move(tree), options.base_vertex, std::move(labels));
}

Base reconstruct_tree(const Matrix& matrix, const ReconstructOptions& options) {
  return reconstruct_tree(GromovMatrix(matrix, options.eps), options);
}

Eigen::MatrixXi gv_adjacency(const GromovMatrix& matrix, double eps) {
  const Eigen::Index n = matrix.size();
  Eigen::MatrixXi adjacency = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      bool direct = true;
      for (Eigen::Index k = 0; k < n && direct; ++k) {
        if (k == i || k == j) continue;
        if (std::abs(matrix(k, k) + matrix(i, j) - matrix(i, k) -
                     matrix(k, j)) <= eps) {
          direct = false;
        }
      }
      adjacency(i, j) = adjacency(j, i) = direct ? 1 : 0;
    }
  }
  return adjacency;
}

namespace {

void check_index(const GromovMatrix& matrix, std::size_t index) {
  if (index >= static_cast<std::size_t>(matrix.size())) {
    throw std::out_of_range("index " + std::to_string(index) +
                            " out of range for a " +
                            std::to_string(matrix.size()) + "x" +
                            std::to_string(matrix.size()) + " matrix");
  }
}

}  // namespace

bool on_path(const GromovMatrix& matrix, std::size_t k, std::size_t i,
             std::size_t j, double eps) {
  check_index(matrix, k);
  check_index(matrix, i);
  check_index(matrix, j);
  const auto at = [&](std::size_t a, std::size_t b) {
    return matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  };
  return std::abs(at(k, k) + at(i, j) - at(i, k) - at(k, j)) <= eps;
}

bool on_path_from_base(const GromovMatrix& matrix, std::size_t k,
                       std::size_t j, double eps) {
  check_index(matrix, k);
  check_index(matrix, j);
  const auto kk = static_cast<Eigen::Index>(k);
  const auto jj = static_cast<Eigen::Index>(j);
  return std::abs(matrix(kk, jj) - matrix(kk, kk)) <= eps;
}

}  // namespace gromov
