#pragma once

#include <string>

#include "qra/io.hpp"

inline std::string fixture(const std::string& rel) { return std::string(QRA_FIXTURES) + "/" + rel; }

inline qra::AlgebraPtr ex31_ptr() {
  static qra::AlgebraPtr a = qra::load_algebra(fixture("ex31.alg"));
  return a;
}

inline qra::AlgebraPtr a2_ptr() {
  static qra::AlgebraPtr a = qra::load_algebra(fixture("a2.alg"));
  return a;
}

inline qra::Representation ex35(const std::string& name) {
  return qra::load_representation(fixture("ex35/" + name + ".rep"), ex31_ptr());
}

inline qra::Representation quasitube(const std::string& name) {
  return qra::load_representation(fixture("quasitube/" + name + ".rep"), ex31_ptr());
}

inline std::size_t vertex(const qra::AlgebraPtr& a, const std::string& name) { return a->quiver().vertex_index(name); }

inline qra::AlgebraPtr b_d7_ptr() {
  static qra::AlgebraPtr a = qra::load_algebra(fixture("b_d7.alg"));
  return a;
}

inline qra::AlgebraPtr make_algebra_ptr(const std::string& text) {
  return std::make_shared<const qra::BoundQuiverAlgebra>(qra::parse_algebra(text));
}

inline qra::Representation a2_module(const std::string& name) {
  return qra::load_representation(fixture("a2/" + name + ".rep"), a2_ptr());
}

// A- of ex31: everything but vertex 4.
inline const std::vector<std::size_t>& ex31_minus() {
  static const std::vector<std::size_t> v = {0, 1, 2, 4};
  return v;
}

inline qra::AlgebraPtr ex31_minus_ptr() {
  static qra::AlgebraPtr s =
      std::make_shared<const qra::BoundQuiverAlgebra>(qra::full_subalgebra(*ex31_ptr(), ex31_minus(), "Aminus"));
  return s;
}

inline qra::Representation to_minus(const qra::Representation& x) {
  return qra::restrict_to_quotient(x, ex31_minus(), ex31_minus_ptr()).module;
}
