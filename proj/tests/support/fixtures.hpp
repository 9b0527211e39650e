#pragma once

#include <initializer_list>
#include <string>

#include "gromov/matrix.hpp"
#include "gromov/tree.hpp"

namespace fixture {

inline gromov::Matrix rows(std::initializer_list<std::initializer_list<double>> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  gromov::Matrix m(n, static_cast<Eigen::Index>(values.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : values) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline gromov::Matrix pair_m1() {
  return rows({{4, 1, 3, 1}, {1, 4, 1, 1}, {3, 1, 4, 1}, {1, 1, 1, 4}});
}
inline gromov::Matrix pair_m2() {
  return rows({{4, 1, 1, 1}, {1, 4, 3, 2}, {1, 3, 4, 2}, {1, 2, 2, 4}});
}
inline gromov::Matrix pair_convex() {
  return rows({{4, 1, 2, 1}, {1, 4, 2, 1.5}, {2, 2, 4, 1.5}, {1, 1.5, 1.5, 4}});
}
inline gromov::Matrix pair_gconvex() {
  return rows({{4, 2, 2, 1.5}, {2, 4, 2, 1.5}, {2, 2, 4, 1.5}, {1.5, 1.5, 1.5, 4}});
}
inline gromov::Matrix branched3() { return rows({{8, 5, 2}, {5, 8, 2}, {2, 2, 2}}); }

/// A tree whose Gromov matrix is pair_m1.
inline gromov::Base pair_t1() {
  gromov::WeightedTree tree({{"s", "p", 1},
                             {"p", "u2", 3},
                             {"p", "u4", 3},
                             {"p", "q", 2},
                             {"q", "u1", 1},
                             {"q", "u3", 1}});
  return gromov::Base(std::move(tree), "s", {"u1", "u2", "u3", "u4"});
}

/// Three-leaf pair whose G-convex path has one kink: x1 > x2 and y1 < y2.
struct KinkedPair {
  double d1, d2, d3, x1, x2;
  double e1, e2, e3, y1, y2;

  gromov::Matrix m1() const {
    return rows({{d1, x1, x2}, {x1, d2, x2}, {x2, x2, d3}});
  }
  gromov::Matrix m2() const {
    return rows({{e1, y1, y1}, {y1, e2, y2}, {y1, y2, e3}});
  }
  double theta_star() const { return (y2 - y1) / ((x1 - x2) + (y2 - y1)); }
};

}  // namespace fixture
