#include <gtest/gtest.h>

#include <chrono>

#include "qra/homological.hpp"
#include "qra/orbit.hpp"
#include "support.hpp"

using namespace qra;

namespace {

std::shared_ptr<const Repetitive> rep_b() {
  static auto r = std::make_shared<const Repetitive>(b_d7_ptr());
  return r;
}

const LazyAuto& phi() {
  static LazyAuto f = load_automorphism(fixture("phi_d7.auto"), *rep_b());
  return f;
}

}  // namespace

TEST(Repetitive, ProductsMatchReplicated) {
  // The lazy products agree with the two-layer replicated algebra.
  const Repetitive& r = *rep_b();
  StructAlgebra w = replicated(*b_d7_ptr(), 2);
  RepetitiveWindow win;
  win.base = b_d7_ptr();
  win.layers = 2;
  const std::size_t n = r.base_dim();
  std::vector<Key> keys;
  for (std::size_t x = 0; x < n; ++x) keys.emplace_back(0, x), keys.emplace_back(1, x);
  for (std::size_t p = 0; p < n; ++p) keys.emplace_back(1, n + p);
  for (auto a : keys)
    for (auto c : keys) {
      LazyVec lazy;
      r.multiply_keys(a, c, Scalar::raw(1), lazy);
      prune(lazy);
      const std::size_t ia = win.struct_index(a), ic = win.struct_index(c);
      Vec expect(w.dim());
      if (w.target(ia) == w.source(ic))
        for (const auto& [k, v] : w.product(ia, ic)) expect[k] += v;
      Vec got(w.dim());
      for (const auto& [k, v] : lazy) got[win.struct_index(k)] += v;
      EXPECT_EQ(got, expect) << r.label(a) << " * " << r.label(c);
    }
}

TEST(Automorphism, PhiSquaredIsNakayama) {
  const Repetitive& r = *rep_b();
  LazyAuto nu = nakayama_auto(r);
  LazyAuto sq = then(phi(), phi());
  EXPECT_EQ(sq.vertex, nu.vertex);
  EXPECT_EQ(sq.image, nu.image);
  LazyAuto file_nu = load_automorphism(fixture("nu_d7.auto"), r);
  EXPECT_EQ(file_nu.image, nu.image);
  LazyAuto inv = inverse_auto(r, phi());
  LazyAuto id = then(phi(), inv);
  EXPECT_EQ(id.image, identity_auto(r).image);
}

TEST(Automorphism, Rejections) {
  const Repetitive& r = *rep_b();
  std::string text = read_file(fixture("phi_d7.auto"));
  // swap the images of alpha and gamma: vertex rule no longer matches
  std::string bad = text;
  bad.replace(bad.find("arrow alpha -> gamma shift 0"), 28, "arrow alpha -> alpha shift 0");
  EXPECT_THROW(build_automorphism(r, parse_automorphism(bad, r.base())), Error);
  std::string scaled = text;
  scaled.replace(scaled.find("arrow beta -> eps shift 0"), 25, "arrow beta -> eps shift 0 coeff 2");
  EXPECT_THROW(build_automorphism(r, parse_automorphism(scaled, r.base())), Error);
  EXPECT_THROW(parse_automorphism("automorphism x over C\n", r.base()), Error);
  EXPECT_THROW(parse_automorphism("automorphism x over B\nconnect t : 8 -> 2 dual rho\n", r.base()), Error);
  try {
    parse_automorphism("automorphism x over B\nvertex 9 -> 1 shift 0\n", r.base());
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Orbit, NakayamaGivesTrivialExtension) {
  auto b = b_d7_ptr();
  OrbitAlgebra o = orbit_algebra(b, nakayama_auto(*rep_b()), 1);
  EXPECT_EQ(o.structure().num_vertices(), 8u);
  EXPECT_EQ(o.structure().dim(), 36u);
  auto t = presentation_from_struct(trivial_extension(*b)).algebra;
  EXPECT_TRUE(presentations_isomorphic(*o.algebra(), t).has_value());
  OrbitAlgebra o2 = orbit_algebra(b, phi(), 2);
  EXPECT_TRUE(presentations_isomorphic(*o2.algebra(), t).has_value());
}

TEST(Orbit, A1) {
  OrbitAlgebra o = orbit_algebra(b_d7_ptr(), phi(), 1);
  EXPECT_EQ(o.structure().num_vertices(), 4u);
  EXPECT_EQ(o.structure().dim(), 18u);
  EXPECT_TRUE(check_selfinjective(o.algebra()));
  EXPECT_TRUE(check_symmetric(o.structure()).symmetric);
  EXPECT_EQ(o.algebra()->quiver().num_arrows(), 6u);
}

TEST(Orbit, A3) {
  OrbitAlgebra o = orbit_algebra(b_d7_ptr(), phi(), 3);
  EXPECT_EQ(o.structure().num_vertices(), 12u);
  EXPECT_EQ(o.structure().dim(), 54u);
  EXPECT_TRUE(check_selfinjective(o.algebra()));
  EXPECT_EQ(o.algebra()->quiver().num_arrows(), 18u);
}

TEST(Orbit, WindowTooSmall) {
  EXPECT_THROW(orbit_algebra(b_d7_ptr(), phi(), 1, 1), Error);
}

TEST(Pushdown, ProjectivesAndDimensions) {
  auto b = b_d7_ptr();
  RepetitiveWindow w = make_window(b, 3);
  for (std::size_t r : {1u, 2u}) {
    OrbitAlgebra o = orbit_algebra(b, phi(), r);
    for (std::size_t i = 0; i < 8; ++i) {
      auto p = projective(w.algebra, w.vertex({2, i}));
      auto f = pushdown(w, p, o);
      EXPECT_EQ(f.total_dim(), p.total_dim());
      EXPECT_TRUE(is_projective_module(f));
      EXPECT_TRUE(module_iso(f, projective(o.algebra(), o.orbit_of({2, i}))).isomorphic);
    }
  }
}

TEST(Pushdown, LayerZeroModuleIntoTrivialExtension) {
  auto b = b_d7_ptr();
  RepetitiveWindow w = make_window(b, 1);
  OrbitAlgebra o = orbit_algebra(b, nakayama_auto(*rep_b()), 1);
  auto m = injective(w.algebra, 0);
  auto f = pushdown(w, m, o);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(f.dim(o.orbit_of({0, i})), m.dim(i));
}
