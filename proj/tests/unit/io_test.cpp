#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gromov/format.hpp"
#include "gromov/graph_io.hpp"
#include "gromov/matrix_io.hpp"
#include "gromov/reconstruct.hpp"

using namespace gromov;
using fixture::rows;

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(1.5), "1.5");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(0.1), "0.1");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(parse_double(format_double(x), "x"), x);
  EXPECT_THROW(parse_double("1.5x", "x"), Error);
  EXPECT_THROW(parse_double("", "x"), Error);
}

TEST(MatrixIo, Csv) {
  const Matrix m = parse_matrix("# comment\n4, 1\n\n1,4\n");
  EXPECT_TRUE(approx_equal(m, rows({{4, 1}, {1, 4}}), 0.0));
  EXPECT_EQ(format_matrix_csv(fixture::pair_convex()),
            "4,1,2,1\n1,4,2,1.5\n2,2,4,1.5\n1,1.5,1.5,4\n");
  EXPECT_TRUE(approx_equal(parse_matrix(format_matrix_csv(fixture::branched3())), fixture::branched3(), 0.0));
}

TEST(MatrixIo, Json) {
  const Matrix m = parse_matrix(R"({"n": 2, "entries": [4, 1, 1, 4.5]})");
  EXPECT_TRUE(approx_equal(m, rows({{4, 1}, {1, 4.5}}), 0.0));
  EXPECT_TRUE(approx_equal(parse_matrix(format_matrix_json(fixture::branched3())), fixture::branched3(), 0.0));
  EXPECT_THROW(parse_matrix(R"({"n": 2, "entries": [4, 1, 1]})"), StructuralError);
  EXPECT_THROW(parse_matrix(R"({"n": 2)"), ParseError);
}

TEST(MatrixIo, Errors) {
  EXPECT_THROW(parse_matrix("1,2\n3\n"), StructuralError);
  try {
    parse_matrix("1,2\n3,abc\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ProgramIo, RoundTrip) {
  const std::string text = "init 3\ninit 3\ndsum\next2 5 2\next1 0.5\nperm 2 1 3\n";
  const BuildProgram p = parse_program("# branched three-leaf tree\n" + text);
  ASSERT_EQ(p.ops.size(), 5u);
  EXPECT_EQ(p.permutation, (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(format_program(p), text);
}

TEST(ProgramIo, Errors) {
  EXPECT_THROW(parse_program("init\n"), ParseError);
  EXPECT_THROW(parse_program("grow 2\n"), ParseError);
  EXPECT_THROW(parse_program("init 1\nperm 0\n"), ParseError);
  EXPECT_THROW(parse_program("init 1\nperm 1\ninit 2\n"), ParseError);
  try {
    parse_program("init 1\n\next2 x 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(BaseIo, RoundTrip) {
  const std::string text =
      "tree\ns v3 2\nv3 b 3\nb v1 3\nb v2 3\nbase_vertex s\nbase_set v1 v2 v3\n";
  EXPECT_TRUE(looks_like_base(text));
  EXPECT_FALSE(looks_like_base("init 2\n"));
  const Base b = parse_base(text);
  EXPECT_EQ(b.base_set(), (std::vector<std::string>{"v1", "v2", "v3"}));
  EXPECT_TRUE(approx_equal(gromov_matrix(b).entries(), fixture::branched3(), 0.0));
  EXPECT_EQ(format_base(b), text);
  EXPECT_EQ(format_base(parse_base(format_base(b))), text);
}

TEST(BaseIo, Errors) {
  EXPECT_THROW(parse_base("s v 1\nbase_vertex s\nbase_set v\n"), ParseError);
  EXPECT_THROW(parse_base("tree\ns v 1\nbase_set v\n"), ParseError);
  EXPECT_THROW(parse_base("tree\ns v 1\nbase_vertex s\n"), ParseError);
  EXPECT_THROW(parse_base("tree\ns v 1\nbase_vertex s\nbase_set w\n"), UnknownNodeError);
  EXPECT_THROW(parse_base("tree\ns v 1 2\nbase_vertex s\nbase_set v\n"), ParseError);
}

TEST(BaseIo, SingleNodeTree) {
  const Base b = parse_base("tree\nbase_vertex s\nbase_set\n");
  EXPECT_EQ(b.tree().size(), 1u);
  EXPECT_EQ(b.size(), 0u);
}

TEST(GraphIo, GraphFormat) {
  const auto g = parse_graph("graph\na b 1\nb c 2.5\n");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[1].weight, 2.5);
  EXPECT_EQ(format_graph(g), "graph\na b 1\nb c 2.5\n");
  EXPECT_THROW(parse_graph("graph\na b 1\nc d 1\n"), Error);
  EXPECT_THROW(parse_graph("a b 1\n"), ParseError);
}

TEST(GraphIo, EdgeList) {
  const std::string text = "% header\n1 2 3\n2 1 9\n2 3\n3 3\n7 8\n";
  const auto g = parse_edge_list(text);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0].weight, 3.0);
  const auto unit = parse_edge_list(text, {true});
  EXPECT_EQ(unit.edges()[0].weight, 1.0);
  EXPECT_FALSE(g.contains("7"));
}
