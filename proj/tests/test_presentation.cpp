#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qra/presentation.hpp"

using namespace qra;

static std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(QRA_FIXTURES) + "/" + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static BoundQuiverAlgebra ex31() { return parse_algebra(slurp("ex31.alg")); }

// Oracle: basis of ex31 enumerated by hand, listed as path strings.
TEST(Presentation, Ex31Basis) {
  auto a = ex31();
  EXPECT_EQ(a.dim(), 14u);
  std::set<std::string> got;
  for (std::size_t i = 0; i < a.dim(); ++i) got.insert(a.basis_label(i));
  std::set<std::string> hand = {"e1", "e2", "e3", "e4", "e5", "delta", "beta", "gamma", "alpha", "lambda", "mu",
                                "gamma.delta", "alpha.gamma", "lambda.mu"};
  EXPECT_EQ(got, hand);
  EXPECT_NO_THROW(a.structure().check_associative());
}

TEST(Presentation, Ex31Cartan) {
  auto a = ex31();
  auto c = cartan_matrix(a);
  std::vector<std::size_t> row4 = {1, 1, 1, 1, 1};
  EXPECT_EQ(c[3], row4);
  std::vector<std::size_t> row3 = {1, 2, 1, 0, 0};
  EXPECT_EQ(c[2], row3);
  // column 2 of the Cartan matrix = dims of the injective at 2
  std::vector<std::size_t> col2;
  for (std::size_t i = 0; i < 5; ++i) col2.push_back(c[i][1]);
  EXPECT_EQ(col2, (std::vector<std::size_t>{0, 1, 2, 1, 0}));
}

TEST(Presentation, Ex31ReducesLongPath) {
  auto a = ex31();
  auto q = a.quiver();
  // alpha.gamma.delta = lambda.mu
  Vec lhs = a.reduce(parse_path(q, "alpha.gamma.delta"));
  Vec rhs = a.reduce(parse_path(q, "lambda.mu"));
  EXPECT_EQ(lhs, rhs);
  EXPECT_FALSE(is_zero_vec(lhs));
  EXPECT_TRUE(is_zero_vec(a.reduce(parse_path(q, "alpha.beta"))));
  EXPECT_EQ(a.loewy_length(), 4u);
}

TEST(Presentation, ParseErrors) {
  EXPECT_THROW(parse_algebra("vertices 1 2\narrow a : 1 -> 3\n"), Error);
  EXPECT_THROW(parse_algebra("vertices 1 2\narrow a : 1 -> 2\nrelation a\n"), Error);
  EXPECT_THROW(parse_algebra("field 32004\nvertices 1\n"), Error);
  EXPECT_THROW(parse_algebra("vertices 1\narrow x : 1 -> 1\n"), Error);  // loop without relations
  try {
    parse_algebra("vertices 1 2\narrow a : 1 -> 2\nrelation a.a\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "not_composable");
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Presentation, LoopWithRelation) {
  auto a = parse_algebra("vertices 1\narrow x : 1 -> 1\nrelation x.x.x\n");
  EXPECT_EQ(a.dim(), 3u);
}

TEST(Presentation, KroneckerAndA2) {
  auto k = parse_algebra(slurp("kronecker.alg"));
  EXPECT_EQ(k.dim(), 4u);
  auto a2 = parse_algebra(slurp("a2.alg"));
  EXPECT_EQ(a2.dim(), 3u);
  EXPECT_FALSE(presentations_isomorphic(k, a2));
}

TEST(Presentation, OppositeTwiceIsIdentity) {
  auto a = ex31();
  auto op = opposite(a);
  EXPECT_EQ(op.name(), "A^op");
  EXPECT_NO_THROW(op.structure().check_associative());
  auto back = opposite(op);
  EXPECT_EQ(back.name(), "A");
  EXPECT_TRUE(back.same_quiver(a));
  auto c = cartan_matrix(op), ca = cartan_matrix(a);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(c[i][j], ca[j][i]);
}

TEST(Presentation, RoundTripThroughText) {
  auto a = ex31();
  auto b = parse_algebra(to_alg_text(a));
  EXPECT_TRUE(b.same_quiver(a));
  EXPECT_EQ(b.dim(), a.dim());
  EXPECT_TRUE(presentations_isomorphic(a, b));
}

TEST(Presentation, FromStructRecoversEx31) {
  auto a = ex31();
  auto p = presentation_from_struct(a.structure());
  EXPECT_EQ(p.algebra.dim(), 14u);
  EXPECT_EQ(p.algebra.quiver().num_arrows(), 6u);
  EXPECT_TRUE(p.relations_minimized);
  EXPECT_EQ(p.algebra.relations().size(), 3u);
  EXPECT_NO_THROW(p.algebra.structure().check_associative());
  auto w = presentations_isomorphic(a, p.algebra);
  ASSERT_TRUE(w);
}

TEST(Presentation, IsoDetectsScalarChange) {
  // relation a.b - 2*c.d is isomorphic to a.b - c.d by rescaling.
  const std::string head = "vertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n";
  auto x = parse_algebra(head + "relation a.b - c.d\n");
  auto y = parse_algebra(head + "relation a.b - 2*c.d\n");
  auto z = parse_algebra(head + "relation a.b\n");
  EXPECT_TRUE(presentations_isomorphic(x, y));
  EXPECT_FALSE(presentations_isomorphic(x, z));
}

TEST(Presentation, FullSubalgebra) {
  auto a = ex31();
  auto sub = full_subalgebra(a, {0, 1, 2, 4}, "A-");
  EXPECT_EQ(sub.num_vertices(), 4u);
  EXPECT_EQ(sub.dim(), 9u);  // e1 e2 e3 e5 delta beta gamma gamma.delta mu
  EXPECT_THROW(full_subalgebra(a, {0, 3}, "bad"), Error);
}

TEST(Presentation, SolveModComposite) {
  // 2x = 4 mod 6 has solutions; 2x = 3 mod 6 has none.
  auto s = detail::solve_mod({{2}}, {4}, 6);
  ASSERT_TRUE(s);
  EXPECT_EQ((2 * (*s)[0]) % 6, 4);
  EXPECT_FALSE(detail::solve_mod({{2}}, {3}, 6));
  auto t = detail::solve_mod({{3, 5}, {1, 1}}, {1, 1}, 32002);
  ASSERT_TRUE(t);
  EXPECT_EQ((3 * (*t)[0] + 5 * (*t)[1]) % 32002, 1);
  EXPECT_EQ(((*t)[0] + (*t)[1]) % 32002, 1);
  EXPECT_FALSE(detail::solve_mod({{3, 5}, {1, 1}}, {1, 2}, 32002));
  // repeated pivots and +-1 entries; the third and fourth rows differ by the second
  const std::vector<std::vector<std::int64_t>> e{{1, -1, 0, 0}, {1, 0, -1, 0}, {1, 1, 0, -1}, {0, 1, 1, -1}};
  auto u = detail::solve_mod(e, {0, 0, 0, 0}, 32002);
  ASSERT_TRUE(u);
  auto v = detail::solve_mod(e, {5, -2, 11, 13}, 32002);
  ASSERT_TRUE(v);
  const std::vector<std::int64_t> rhs{5, -2, 11, 13};
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < 4; ++j) acc += e[i][j] * (*v)[j];
    EXPECT_EQ(((acc - rhs[i]) % 32002 + 32002) % 32002, 0);
  }
}
