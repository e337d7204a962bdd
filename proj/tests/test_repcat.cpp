#include <gtest/gtest.h>

#include "support.hpp"

using namespace qra;

using Dims = std::vector<std::size_t>;

TEST(Standard, ProjectivesOfEx31) {
  auto a = ex31_ptr();
  auto p4 = projective(a, vertex(a, "4"));
  EXPECT_EQ(p4.dims(), (Dims{1, 1, 1, 1, 1}));
  EXPECT_NO_THROW(p4.validate());
  EXPECT_EQ(layer_string(a->quiver(), loewy_data(p4).radical_layers), "4/3 5/2/1");
  auto p3 = projective(a, vertex(a, "3"));
  EXPECT_EQ(p3.dims(), (Dims{1, 2, 1, 0, 0}));
  EXPECT_EQ(layer_string(a->quiver(), loewy_data(p3).radical_layers), "3/2 2/1");
}

TEST(Standard, InjectivesOfEx31) {
  auto a = ex31_ptr();
  auto i2 = injective(a, vertex(a, "2"));
  EXPECT_EQ(i2.dims(), (Dims{0, 1, 2, 1, 0}));
  EXPECT_NO_THROW(i2.validate());
  EXPECT_EQ(layer_string(a->quiver(), loewy_data(i2).socle_layers), "4/3 3/2");
  auto i1 = injective(a, vertex(a, "1"));
  EXPECT_EQ(i1.dims(), (Dims{1, 1, 1, 1, 1}));
  auto iso = module_iso(projective(a, vertex(a, "4")), i1);
  ASSERT_TRUE(iso.isomorphic);
  EXPECT_TRUE(is_morphism(projective(a, vertex(a, "4")), i1, *iso.witness));
  EXPECT_TRUE(is_iso_morphism(*iso.witness));
  auto i4 = injective(a, vertex(a, "4"));
  EXPECT_TRUE(module_iso(i4, simple(a, vertex(a, "4"))).isomorphic);
}

TEST(Standard, A2) {
  auto a = a2_ptr();
  auto p1 = projective(a, 0), p2 = projective(a, 1);
  EXPECT_TRUE(module_iso(p1, simple(a, 0)).isomorphic);
  EXPECT_TRUE(module_iso(injective(a, 1), simple(a, 1)).isomorphic);
  // 1 is a sink, so P(1) = S(1) embeds in P(2) and nothing maps back.
  EXPECT_EQ(hom_dim(p1, p2), 1u);
  EXPECT_EQ(hom_dim(p2, p1), 0u);
  EXPECT_EQ(hom_dim(simple(a, 0), simple(a, 1)), 0u);
}

TEST(Standard, FixtureSummandsMatchComputed) {
  auto a = ex31_ptr();
  const std::vector<std::pair<std::string, std::string>> proj = {{"p1", "1"}, {"p2", "2"}, {"p3", "3"}, {"p4", "4"}, {"p5", "5"}};
  for (const auto& [f, v] : proj) EXPECT_TRUE(module_iso(ex35(f), projective(a, vertex(a, v))).isomorphic) << f;
  const std::vector<std::pair<std::string, std::string>> inj = {{"p4", "1"}, {"i2", "2"}, {"i3", "3"}, {"i4", "4"}, {"i5", "5"}};
  for (const auto& [f, v] : inj) EXPECT_TRUE(module_iso(ex35(f), injective(a, vertex(a, v))).isomorphic) << f;
}

TEST(Hom, AdditivityOnFixtures) {
  std::vector<Representation> mods = {ex35("p3"), ex35("i2"), ex35("m25_1"), quasitube("q4_3_2"), ex35("s2")};
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j) {
      auto s = direct_sum({mods[i], mods[j]}).module;
      for (const auto& y : mods) {
        EXPECT_EQ(hom_dim(s, y), hom_dim(mods[i], y) + hom_dim(mods[j], y));
        EXPECT_EQ(hom_dim(y, s), hom_dim(y, mods[i]) + hom_dim(y, mods[j]));
      }
    }
}

TEST(Hom, ProjectiveHomIsVertexSpace) {
  // Oracle: Hom(P(x), X) = X e_x.
  auto a = ex31_ptr();
  std::vector<Representation> mods = {ex35("i2"), ex35("m3_25_1"), quasitube("q4_35_2"), ex35("p4")};
  for (const auto& x : mods)
    for (std::size_t v = 0; v < 5; ++v) EXPECT_EQ(hom_dim(projective(a, v), x), x.dim(v));
}

TEST(Duality, Involution) {
  auto a = ex31_ptr();
  for (const auto& x : {ex35("i2"), ex35("p3"), quasitube("q4_35_2")}) {
    auto dx = dualize(x);
    EXPECT_EQ(dx.dims(), x.dims());
    EXPECT_NO_THROW(dx.validate());
    auto ddx = dualize(dx);
    EXPECT_EQ(ddx.algebra_ptr(), a);
    EXPECT_TRUE(module_iso(ddx, x).isomorphic);
  }
  auto x = ex35("i2"), y = quasitube("q4_3_2");
  EXPECT_EQ(hom_dim(x, y), hom_dim(dualize(y), dualize(x)));
  auto op = opposite_ptr(a);
  EXPECT_TRUE(module_iso(dualize(projective(a, 3)), injective(op, 3)).isomorphic);
}

TEST(Loewy, TopAndSocle) {
  auto a = ex31_ptr();
  EXPECT_EQ(loewy_data(projective(a, 3)).top, (Dims{0, 0, 0, 1, 0}));
  EXPECT_EQ(loewy_data(injective(a, 0)).socle, (Dims{1, 0, 0, 0, 0}));
  EXPECT_EQ(loewy_data(simple(a, 2)).loewy_length, 1u);
  EXPECT_EQ(loewy_data(simple(a, 2)).radical_layers.size(), 1u);
}

TEST(Restriction, InjectivesToMinusPart) {
  auto a = ex31_ptr();
  const std::vector<std::size_t> minus = {0, 1, 2, 4};
  auto sub = std::make_shared<const BoundQuiverAlgebra>(full_subalgebra(*a, minus, "Aminus"));
  auto r1 = restrict_to_quotient(injective(a, 0), minus, sub);
  EXPECT_EQ(r1.as_submodule.dims(), (Dims{1, 1, 1, 0, 1}));
  EXPECT_TRUE(module_iso(r1.as_submodule, ex35("m3_25_1")).isomorphic);
  auto r2 = restrict_to_quotient(injective(a, 1), minus, sub);
  EXPECT_EQ(r2.as_submodule.dims(), (Dims{0, 1, 2, 0, 0}));
  EXPECT_TRUE(module_iso(r2.as_submodule, ex35("m33_2")).isomorphic);
  // Each restriction is the injective of the subalgebra at that vertex.
  for (std::size_t k = 0; k < minus.size(); ++k) {
    auto r = restrict_to_quotient(injective(a, minus[k]), minus, sub);
    EXPECT_TRUE(module_iso(r.module, injective(sub, k)).isomorphic);
    EXPECT_TRUE(is_morphism(r.as_submodule, injective(a, minus[k]), r.inclusion));
  }
  auto all = restrict_to_quotient(ex35("i2"), {0, 1, 2, 3, 4}, a);
  EXPECT_TRUE(module_iso(all.module, ex35("i2")).isomorphic);
  EXPECT_THROW(restrict_to_quotient(ex35("i2"), {0, 3}, a), Error);
}

TEST(Decompose, SquareOfProjective) {
  auto a = ex31_ptr();
  auto p4 = projective(a, 3);
  auto parts = decompose_with_multiplicity(direct_sum({p4, p4}).module);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].second, 2u);
  EXPECT_TRUE(module_iso(parts[0].first, p4).isomorphic);
}

TEST(Decompose, SimplesOfA2) {
  auto a = a2_ptr();
  auto parts = decompose(direct_sum({simple(a, 0), simple(a, 1)}).module);
  ASSERT_EQ(parts.size(), 2u);
}

TEST(Decompose, GeneratorOfEx35) {
  auto a = ex31_ptr();
  auto parts = load_list(fixture("ex35_M.list"), a);
  ASSERT_EQ(parts.size(), 16u);
  auto m = direct_sum(parts).module;
  Dims sum(5, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < 5; ++v) sum[v] += p.dim(v);
  EXPECT_EQ(m.dims(), sum);
  auto dec = decompose(m);
  EXPECT_EQ(dec.size(), 16u);
  std::vector<Representation> mods;
  for (auto& s : dec) {
    EXPECT_TRUE(is_morphism(s.module, m, s.inclusion));
    EXPECT_TRUE(is_morphism(m, s.module, s.projection));
    mods.push_back(s.module);
  }
  auto classes = group_isoclasses(mods);
  EXPECT_EQ(classes.size(), 16u);
  for (const auto& c : classes) EXPECT_EQ(c.multiplicity, 1u);
  // Reassembling gives back M.
  EXPECT_TRUE(module_iso(direct_sum(mods).module, m).isomorphic);
}

TEST(Iso, Negative) {
  auto a = ex31_ptr();
  EXPECT_FALSE(module_iso(simple(a, 0), simple(a, 1)).isomorphic);
  EXPECT_FALSE(module_iso(quasitube("q3_2"), quasitube("h3_2")).isomorphic);
  EXPECT_TRUE(module_iso(ex35("s3"), ex35("s3")).isomorphic);
}

TEST(Parse, RepErrors) {
  auto a = ex31_ptr();
  EXPECT_THROW(parse_representation("module X over A\ndim 1=1 2=1\nmap delta = [[1,0]]\n", a), Error);
  EXPECT_THROW(parse_representation("module X over B\ndim 1=1\n", a), Error);
  // alpha.beta must vanish
  EXPECT_THROW(parse_representation("module X over A\ndim 2=1 3=1 4=1\nmap alpha = [[1]]\nmap beta = [[1]]\n", a), Error);
  auto x = parse_representation(to_rep_text(ex35("i2"), "I2"), a);
  EXPECT_TRUE(module_iso(x, ex35("i2")).isomorphic);
}
