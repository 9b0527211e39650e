#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gromov/reconstruct.hpp"
#include "gromov/tree.hpp"
#include "oracles.hpp"

using namespace gromov;

namespace {

WeightedTree star(double r, int spokes) {
  std::vector<TreeEdge> edges;
  for (int i = 1; i <= spokes; ++i) edges.push_back({"s", "v" + std::to_string(i), r});
  return WeightedTree(std::move(edges));
}

}  // namespace

TEST(WeightedTree, RejectsNonTrees) {
  EXPECT_THROW(WeightedTree({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}}), Error);
  EXPECT_THROW(WeightedTree({{"a", "b", 1}, {"c", "d", 1}}), Error);
  EXPECT_THROW(WeightedTree({{"a", "b", 0}}), Error);
  EXPECT_THROW(WeightedTree({{"a", "b", -2}}), Error);
  EXPECT_THROW(WeightedTree({{"a", "a", 1}}), Error);
  EXPECT_THROW(WeightedTree({{"a", "b", 1}, {"b", "a", 2}}), Error);
  EXPECT_THROW(WeightedTree({{"a", "b", 1}}, {"z"}), Error);
}

TEST(WeightedTree, SingleNode) {
  const auto t = WeightedTree::single("s");
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(tree_distance(t, "s", "s"), 0.0);
}

TEST(TreeDistance, Examples) {
  const WeightedTree path({{"u", "p", 3}, {"p", "v", 2}});
  EXPECT_EQ(tree_distance(path, "u", "v"), 5.0);
  EXPECT_EQ(tree_distance(path, "v", "u"), 5.0);
  EXPECT_EQ(tree_distance(path, "u", "u"), 0.0);
  EXPECT_EQ(tree_distance(star(2, 2), "v1", "v2"), 4.0);
}

TEST(TreeDistance, UnknownNodeIsNamed) {
  const WeightedTree path({{"u", "p", 3}});
  try {
    tree_distance(path, "u", "ghost");
    FAIL() << "expected UnknownNodeError";
  } catch (const UnknownNodeError& e) {
    EXPECT_EQ(e.node(), "ghost");
    EXPECT_NE(std::string(e.what()).find("ghost"), std::string::npos);
  }
}

TEST(GromovProduct, Examples) {
  const WeightedTree t({{"s", "p", 2}, {"p", "u", 1}, {"p", "v", 3}});
  EXPECT_EQ(gromov_product(t, "s", "u", "v"), 2.0);
  EXPECT_EQ(gromov_product(t, "s", "v", "u"), 2.0);
  // s between u and v
  EXPECT_EQ(gromov_product(t, "p", "s", "u"), 0.0);
  // u on [s, v]
  const WeightedTree line({{"s", "u", 2}, {"u", "v", 5}});
  EXPECT_EQ(gromov_product(line, "s", "u", "v"), 2.0);
}

TEST(GromovProduct, MatchesDistanceFormulaOnRandomTrees) {
  Engine engine = make_engine({7, 0});
  for (int trial = 0; trial < 50; ++trial) {
    const Base b = oracle::random_base(engine, 5, 6);
    const Matrix d = oracle::all_pairs(b.tree());
    const auto& names = b.tree().names();
    for (std::size_t u = 0; u < names.size(); ++u) {
      for (std::size_t v = 0; v < names.size(); ++v) {
        const auto s = static_cast<Eigen::Index>(b.base_vertex_id());
        const double expected =
            0.5 * (d(static_cast<Eigen::Index>(u), s) +
                   d(static_cast<Eigen::Index>(v), s) -
                   d(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)));
        const double got = gromov_product(b.tree(), "s", names[u], names[v]);
        EXPECT_NEAR(got, expected, 1e-9);
        EXPECT_GE(got, 0.0);
      }
    }
  }
}

TEST(GromovMatrix, StarIsDiagonal) {
  const Base b(star(4, 4), "s", {"v1", "v2", "v3", "v4"});
  EXPECT_TRUE(approx_equal(gromov_matrix(b).entries(),
                           Matrix(Eigen::Vector4d::Constant(4).asDiagonal()), 0.0));
}

TEST(GromovMatrix, PairFirstTree) {
  EXPECT_TRUE(approx_equal(gromov_matrix(fixture::pair_t1()).entries(),
                           fixture::pair_m1(), 0.0));
}

TEST(GromovMatrix, SingleBaseNode) {
  const Base b(WeightedTree({{"s", "v", 2.5}}), "s", {"v"});
  const auto m = gromov_matrix(b);
  ASSERT_EQ(m.size(), 1);
  EXPECT_EQ(m(0, 0), 2.5);
}

TEST(GromovMatrix, AgreesWithBruteForceAndRecoversDistances) {
  Engine engine = make_engine({8, 0});
  for (int trial = 0; trial < 100; ++trial) {
    const Base b = oracle::random_base(engine, 1 + trial % 8, trial % 5, trial % 2 == 0);
    const Matrix expected = oracle::gromov_matrix(b.tree(), "s", b.base_set());
    const auto m = gromov_matrix(b);
    ASSERT_TRUE(approx_equal(m.entries(), expected, 1e-9));
    EXPECT_FALSE(validate(m.entries()).has_value());
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const auto I = static_cast<Eigen::Index>(i);
        const auto J = static_cast<Eigen::Index>(j);
        EXPECT_NEAR(m(I, I) + m(J, J) - 2 * m(I, J),
                    tree_distance(b.tree(), b.base_set()[i], b.base_set()[j]), 1e-9);
      }
    }
  }
}

TEST(Base, Invariants) {
  const WeightedTree t({{"s", "a", 1}, {"a", "b", 1}});
  EXPECT_THROW(Base(t, "s", {"a", "s"}), Error);
  EXPECT_THROW(Base(t, "s", {"a", "a"}), Error);
  EXPECT_THROW(Base(t, "s", {"zz"}), UnknownNodeError);
  EXPECT_THROW(Base(t, "q", {"a"}), UnknownNodeError);
  EXPECT_TRUE(Base(t, "s", {"a", "b"}).is_canonical());
  EXPECT_FALSE(Base(t, "s", {"b"}).is_canonical());
  EXPECT_FALSE(Base(t, "s", {"a"}).is_canonical());
}

TEST(RestrictToSpan, ContractsDegreeTwoNodes) {
  const WeightedTree t({{"s", "a", 1}, {"a", "v", 1}});
  const std::vector<std::string> base_set{"v"};
  const Base b = restrict_to_span(t, "s", base_set);
  ASSERT_EQ(b.tree().size(), 2u);
  EXPECT_EQ(tree_distance(b.tree(), "s", "v"), 2.0);
  EXPECT_TRUE(b.is_canonical());
}

TEST(RestrictToSpan, CanonicalInputIsUnchanged) {
  const Base t1 = fixture::pair_t1();
  const Base r = restrict_to_span(t1.tree(), "s", t1.base_set());
  EXPECT_EQ(r.tree().size(), t1.tree().size());
  EXPECT_EQ(r.tree().edges().size(), t1.tree().edges().size());
  for (const auto& e : t1.tree().edges()) {
    EXPECT_EQ(tree_distance(r.tree(), e.u, e.v), e.weight);
  }
}

TEST(RestrictToSpan, DropsBranchesAwayFromBaseSet) {
  // Branch x-y-z hangs off a, away from every base node.
  const WeightedTree t({{"s", "a", 1},
                        {"a", "v1", 2},
                        {"a", "x", 1},
                        {"x", "y", 1},
                        {"x", "z", 1},
                        {"s", "v2", 3}});
  const std::vector<std::string> base_set{"v1", "v2"};
  const Base b = restrict_to_span(t, "s", base_set);
  EXPECT_FALSE(b.tree().contains("x"));
  EXPECT_FALSE(b.tree().contains("y"));
  EXPECT_FALSE(b.tree().contains("a"));
  EXPECT_EQ(b.tree().size(), 3u);
  EXPECT_EQ(tree_distance(b.tree(), "s", "v1"), 3.0);
}

TEST(RestrictToSpan, PreservesGromovMatrixOnRandomTrees) {
  Engine engine = make_engine({9, 0});
  for (int trial = 0; trial < 100; ++trial) {
    const Base b = oracle::random_base(engine, 1 + trial % 6, 2 + trial % 7);
    const Base r = restrict_to_span(b.tree(), "s", b.base_set());
    EXPECT_TRUE(r.is_canonical());
    EXPECT_TRUE(approx_equal(gromov_matrix(r).entries(),
                             oracle::gromov_matrix(b.tree(), "s", b.base_set()),
                             1e-9));
  }
}

TEST(BasesEquivalent, Cases) {
  const Base t1 = fixture::pair_t1();
  const Base relabeled(WeightedTree({{"s", "P", 1},
                                     {"P", "u2", 3},
                                     {"P", "u4", 3},
                                     {"P", "Q", 2},
                                     {"Q", "u1", 1},
                                     {"Q", "u3", 1}}),
                       "s", {"u1", "u2", "u3", "u4"});
  EXPECT_TRUE(bases_equivalent(t1, relabeled));
  const Base radius4(star(4, 4), "s", {"v1", "v2", "v3", "v4"});
  EXPECT_FALSE(bases_equivalent(t1, radius4));
  const Base small(star(4, 2), "s", {"v1", "v2"});
  EXPECT_FALSE(bases_equivalent(t1, small));

  ReconstructOptions first;
  ReconstructOptions second;
  second.internal_prefix = "branch";
  EXPECT_TRUE(bases_equivalent(reconstruct_tree(fixture::pair_m2(), first),
                               reconstruct_tree(fixture::pair_m2(), second)));
}
