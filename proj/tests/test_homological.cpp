#include <gtest/gtest.h>

#include "qra/homological.hpp"
#include "support.hpp"

using namespace qra;

using Dims = std::vector<std::size_t>;

static AlgebraPtr make(const std::string& text) { return std::make_shared<const BoundQuiverAlgebra>(parse_algebra(text)); }

TEST(Cover, SimpleAndProjective) {
  auto a = ex31_ptr();
  auto c = projective_cover(simple(a, 3));
  EXPECT_EQ(c.vertices, (std::vector<std::size_t>{3}));
  EXPECT_TRUE(module_iso(c.module, projective(a, 3)).isomorphic);
  for (std::size_t v = 0; v < 5; ++v) {
    auto p = projective(a, v);
    auto cp = projective_cover(p);
    EXPECT_EQ(cp.vertices, (std::vector<std::size_t>{v}));
    EXPECT_TRUE(is_iso_morphism(cp.map));
  }
  auto c25 = projective_cover(ex35("m25_1"));
  EXPECT_EQ(c25.vertices, (std::vector<std::size_t>{1, 4}));
  EXPECT_TRUE(is_morphism(c25.module, ex35("m25_1"), c25.map));
  EXPECT_TRUE(is_surjective(c25.map));
}

TEST(Resolution, A2) {
  auto a = a2_ptr();
  auto r = minimal_resolution(simple(a, 1));
  EXPECT_EQ(r.projdim, 1u);
  EXPECT_TRUE(r.exact);
  ASSERT_EQ(r.covers.size(), 2u);
  EXPECT_EQ(r.covers[1].vertices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(minimal_resolution(projective(a, 1)).projdim, 0u);
  EXPECT_EQ(gldim(a).value, 1u);
}

TEST(Resolution, SemisimpleAndLoop) {
  auto s = make("vertices 1 2\n");
  EXPECT_EQ(gldim(s).value, 0u);
  auto loop = make("vertices 1\narrow x : 1 -> 1\nrelation x.x\n");
  auto g = gldim(loop, 5);
  EXPECT_TRUE(g.truncated);
  EXPECT_EQ(g.value, 6u);
}

TEST(Resolution, DifferentialsCompose) {
  auto a = ex31_ptr();
  auto r = minimal_resolution(quasitube("q4_35_2"));
  EXPECT_TRUE(r.exact);
  for (std::size_t i = 1; i < r.differentials.size(); ++i) {
    auto dd = compose(r.differentials[i], r.differentials[i - 1]);
    EXPECT_TRUE(is_zero_morphism(dd));
  }
  // projdim of a sum is the max
  auto x = quasitube("q3_2"), y = ex35("i2");
  auto px = minimal_resolution(x).projdim, py = minimal_resolution(y).projdim;
  EXPECT_EQ(minimal_resolution(direct_sum({x, y}).module).projdim, std::max(px, py));
}

TEST(Transpose, Basics) {
  auto a = a2_ptr();
  auto tr = transpose(simple(a, 1));
  EXPECT_EQ(tr.dims(), (Dims{1, 0}));
  EXPECT_TRUE(transpose(projective(a, 0), true).is_zero());
  EXPECT_THROW(transpose(projective(a, 0)), Error);
  auto b = ex31_ptr();
  for (const auto& x : {quasitube("q3_2"), ex35("i2"), ex35("m25_1"), quasitube("q4_35_2")}) {
    auto t = transpose(x);
    auto tt = transpose(t);
    EXPECT_EQ(tt.algebra_ptr(), b);
    EXPECT_TRUE(module_iso(tt, x).isomorphic) << x.name();
  }
}

TEST(Tau, A2AndKronecker) {
  auto a = a2_ptr();
  auto t = tau(simple(a, 1));
  EXPECT_TRUE(module_iso(t, simple(a, 0)).isomorphic);
  EXPECT_THROW(tau(projective(a, 0)), Error);
  auto k = load_algebra(fixture("kronecker.alg"));
  auto ti = tau(projective(k, 0), true);
  EXPECT_EQ(ti.dims(), (Dims{3, 2}));
  EXPECT_TRUE(is_indecomposable(ti));
}

TEST(Tau, RoundTripOnFixtures) {
  auto a = ex31_ptr();
  EXPECT_THROW(tau(projective(a, 3)), Error);
  for (const auto& x : {quasitube("q3_2"), quasitube("q4_3_2"), ex35("m25_1"), ex35("s3"), quasitube("h3_2")}) {
    auto t = tau(x);
    EXPECT_TRUE(module_iso(tau(t, true), x).isomorphic) << x.name();
  }
  for (const auto& x : {quasitube("q3_2"), ex35("m33_2"), ex35("s2")}) {
    auto t = tau(x, true);
    EXPECT_TRUE(module_iso(tau(t), x).isomorphic) << x.name();
  }
}

TEST(SelfInjective, Examples) {
  EXPECT_FALSE(check_selfinjective(a2_ptr()));
  EXPECT_FALSE(check_selfinjective(ex31_ptr()));
  auto loop = make("vertices 1\narrow x : 1 -> 1\nrelation x.x\n");
  EXPECT_TRUE(check_selfinjective(loop));
  EXPECT_TRUE(check_symmetric(loop->structure()).symmetric);
  EXPECT_FALSE(check_symmetric(a2_ptr()->structure()).symmetric);
}
