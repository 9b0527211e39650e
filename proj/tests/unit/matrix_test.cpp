#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gromov/combination.hpp"
#include "gromov/reconstruct.hpp"
#include "oracles.hpp"

using namespace gromov;
using fixture::rows;

TEST(Validate, ConditionB) {
  const auto v = validate(rows({{1, 3}, {3, 10}}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->condition, Condition::kDiagonalDominant);
  EXPECT_EQ(v->indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_NE(v->message().find("(b)"), std::string::npos);
  EXPECT_NE(v->message().find("(1,2)"), std::string::npos);
}

TEST(Validate, ThreePoint) {
  const auto v = validate(rows({{3, 2, 1}, {2, 3, 2}, {1, 2, 3}}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->condition, Condition::kThreePoint);
  EXPECT_EQ(v->indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_NE(v->message().find("(1,2,3)"), std::string::npos);
}

TEST(Validate, ConditionA) {
  auto v = validate(rows({{0, 0}, {0, 1}}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->condition, Condition::kNonNegative);
  v = validate(rows({{2, -1}, {-1, 2}}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->condition, Condition::kNonNegative);
}

TEST(Validate, CoincidentBaseNodes) {
  const auto v = validate(rows({{1, 1}, {1, 1}}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->condition, Condition::kDistinctPoints);
}

TEST(Validate, AcceptsGromovMatrices) {
  EXPECT_FALSE(validate(Matrix(Eigen::Vector4d::Constant(4).asDiagonal())).has_value());
  EXPECT_FALSE(validate(fixture::pair_m1()).has_value());
  EXPECT_FALSE(validate(fixture::pair_gconvex()).has_value());
  EXPECT_FALSE(validate(fixture::branched3()).has_value());
}

TEST(Validate, StructuralErrors) {
  EXPECT_THROW(validate(Matrix::Ones(2, 3)), StructuralError);
  EXPECT_THROW(validate(rows({{2, 1}, {0, 2}})), StructuralError);
  EXPECT_THROW(GromovMatrix(rows({{1, 3}, {3, 10}})), ValidationError);
}

TEST(ThreePoint, Examples) {
  EXPECT_TRUE(check_three_point(fixture::pair_m1()).empty());
  const auto bad = check_three_point(fixture::pair_convex());
  ASSERT_FALSE(bad.empty());
  const std::array<std::size_t, 3> first3{0, 1, 2};
  EXPECT_NE(std::find(bad.begin(), bad.end(), first3), bad.end());
  EXPECT_TRUE(check_three_point(rows({{5, 9}, {9, 1}})).empty());
}

TEST(ThreePoint, ToleranceGap) {
  const Matrix m = rows({{3, 1, 1 + 1e-12}, {1, 3, 2}, {1 + 1e-12, 2, 3}});
  EXPECT_TRUE(check_three_point(m).empty());
  const Matrix off = rows({{3, 1, 1 + 1e-6}, {1, 3, 2}, {1 + 1e-6, 2, 3}});
  EXPECT_EQ(check_three_point(off).size(), 1u);
}

TEST(Reconstruct, SingleEntry) {
  const Base b = reconstruct_tree(rows({{2.5}}));
  ASSERT_EQ(b.tree().size(), 2u);
  EXPECT_EQ(tree_distance(b.tree(), "s", "v1"), 2.5);
}

TEST(Reconstruct, DiagonalGivesStar) {
  const Base b = reconstruct_tree(Matrix(Eigen::Vector3d(1, 2, 3).asDiagonal()));
  EXPECT_EQ(b.tree().size(), 4u);
  EXPECT_EQ(b.tree().degree(b.tree().id("s")), 3u);
  EXPECT_EQ(tree_distance(b.tree(), "s", "v3"), 3.0);
}

TEST(Reconstruct, PairMidpointCombination) {
  ReconstructOptions options;
  options.labels = {"u1", "u2", "u3", "u4"};
  const Base b = reconstruct_tree(fixture::pair_gconvex(), options);
  EXPECT_TRUE(b.is_canonical());
  // u4 leaves the trunk at 1.5, the rest branch together at 2.
  const auto& t = b.tree();
  const NodeId s = t.id("s");
  ASSERT_EQ(t.degree(s), 1u);
  const NodeId first = t.neighbors(s)[0].node;
  EXPECT_EQ(t.neighbors(s)[0].weight, 1.5);
  EXPECT_EQ(tree_distance(t, "s", "u4"), 4.0);
  EXPECT_EQ(tree_distance(t, t.name(first), "u4"), 2.5);
  for (const char* u : {"u1", "u2", "u3"}) {
    EXPECT_EQ(tree_distance(t, "s", u), 4.0);
  }
  EXPECT_EQ(gromov_product(t, "s", "u1", "u2"), 2.0);
  EXPECT_EQ(gromov_product(t, "s", "u2", "u3"), 2.0);
  EXPECT_EQ(gromov_product(t, "s", "u1", "u4"), 1.5);
  EXPECT_EQ(t.size(), 7u);
}

TEST(Reconstruct, CollinearNodesShareThePath) {
  // s - v1 - v2 - v3 on one line.
  const Base b = reconstruct_tree(rows({{1, 1, 1}, {1, 3, 3}, {1, 3, 6}}));
  EXPECT_EQ(b.tree().size(), 4u);
  EXPECT_EQ(b.tree().degree(b.tree().id("v2")), 2u);
  EXPECT_EQ(tree_distance(b.tree(), "v1", "v3"), 5.0);
}

TEST(Reconstruct, RejectsInvalidMatrix) {
  try {
    reconstruct_tree(rows({{1, 3}, {3, 10}}));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violation().condition, Condition::kDiagonalDominant);
  }
}

TEST(Reconstruct, InternalNamesAvoidLabels) {
  ReconstructOptions options;
  options.labels = {"_p1", "_p2", "x"};
  const Base b = reconstruct_tree(rows({{4, 2, 1}, {2, 4, 1}, {1, 1, 4}}), options);
  EXPECT_TRUE(b.tree().contains("_p3"));
  EXPECT_TRUE(approx_equal(gromov_matrix(b).entries(),
                           rows({{4, 2, 1}, {2, 4, 1}, {1, 1, 4}})));
}

TEST(Reconstruct, RoundTripsRandomMatrices) {
  Engine engine = make_engine({21, 0});
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = oracle::random_gromov(engine, 1 + trial % 10, trial % 3 == 0);
    const Base b = reconstruct_tree(m);
    EXPECT_TRUE(b.is_canonical());
    EXPECT_TRUE(approx_equal(oracle::gromov_matrix(b.tree(), "s", b.base_set()),
                             m.entries(), 1e-9));
  }
}

namespace {

// A(i,j) from explicit paths in the reconstructed tree.
Eigen::MatrixXi walked_adjacency(const GromovMatrix& m) {
  const Base b = reconstruct_tree(m);
  const Matrix d = oracle::all_pairs(b.tree());
  const auto ids = b.base_ids();
  const auto n = static_cast<Eigen::Index>(ids.size());
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      bool direct = true;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (oracle::on_tree_path(d, ids[i], ids[j], ids[k])) direct = false;
      }
      a(i, j) = direct ? 1 : 0;
    }
  }
  return a;
}

}  // namespace

TEST(GvAdjacency, StarIsComplete) {
  const auto a = gv_adjacency(GromovMatrix(Matrix(Eigen::Vector3d(1, 2, 3).asDiagonal())));
  Eigen::MatrixXi k3 = Eigen::MatrixXi::Ones(3, 3);
  k3.diagonal().setZero();
  EXPECT_EQ(a, k3);
}

TEST(GvAdjacency, CollinearIsPath) {
  const auto a = gv_adjacency(GromovMatrix(rows({{1, 1, 1}, {1, 3, 3}, {1, 3, 6}})));
  Eigen::MatrixXi path(3, 3);
  path << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  EXPECT_EQ(a, path);
}

TEST(GvAdjacency, ThreeLeavesOffOnePathPoint) {
  // v1 sits on the trunk; v2, v3, v4 branch from the same point beyond it:
  // every pair among them is direct, so G_V holds a triangle.
  const Matrix m = rows({{1, 1, 1, 1}, {1, 3, 2, 2}, {1, 2, 3, 2}, {1, 2, 2, 3}});
  const auto a = gv_adjacency(GromovMatrix(m));
  EXPECT_EQ(a(1, 2), 1);
  EXPECT_EQ(a(2, 3), 1);
  EXPECT_EQ(a(1, 3), 1);
  EXPECT_EQ(a, walked_adjacency(GromovMatrix(m)));
}

TEST(GvAdjacency, MatchesPathWalkOnRandomMatrices) {
  Engine engine = make_engine({22, 0});
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_gromov(engine, 2 + trial % 7, trial % 2 == 0);
    EXPECT_EQ(gv_adjacency(m), walked_adjacency(m));
  }
}

TEST(OnPath, Examples) {
  const GromovMatrix line(rows({{1, 1}, {1, 3}}));
  EXPECT_TRUE(on_path_from_base(line, 0, 1));
  EXPECT_FALSE(on_path_from_base(line, 1, 0));
  const GromovMatrix s3(Matrix(Eigen::Vector3d(1, 2, 3).asDiagonal()));
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_FALSE(on_path(s3, k, (k + 1) % 3, (k + 2) % 3));
  }
  EXPECT_THROW(on_path(s3, 0, 1, 3), std::out_of_range);
  EXPECT_THROW(on_path_from_base(s3, 5, 1), std::out_of_range);
}

TEST(OnPath, AgreesWithTreeWalk) {
  const GromovMatrix m(fixture::pair_gconvex());
  Engine engine = make_engine({23, 0});
  std::vector<GromovMatrix> cases{m};
  for (int t = 0; t < 50; ++t) cases.push_back(oracle::random_gromov(engine, 2 + t % 6, true));
  for (const auto& g : cases) {
    const Base b = reconstruct_tree(g);
    const Matrix d = oracle::all_pairs(b.tree());
    const auto ids = b.base_ids();
    const auto s = b.base_vertex_id();
    const auto n = static_cast<std::size_t>(g.size());
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(on_path_from_base(g, k, i), oracle::on_tree_path(d, s, ids[i], ids[k]));
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_EQ(on_path(g, k, i, j), oracle::on_tree_path(d, ids[i], ids[j], ids[k]));
        }
      }
    }
  }
}
