#include <gtest/gtest.h>

#include "qra/kernel.hpp"
#include "qra/struct_algebra.hpp"

using namespace qra;

TEST(Scalar, ArithmeticModP) {
  Scalar a(32002), b(2);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((b - a).value(), 3u);
  EXPECT_EQ((a * a).value(), 1u);
  EXPECT_EQ((Scalar(7) / Scalar(7)).value(), 1u);
  EXPECT_EQ(Scalar(-1).signed_value(), -1);
  EXPECT_THROW(Scalar(0).inverse(), Error);
}

TEST(Matrix, RankOfSingular) {
  Matrix m{{1, 2}, {2, 4}};
  EXPECT_EQ(rank(m), 1u);
}

TEST(Matrix, SolveUpperTriangular) {
  auto x = solve(Matrix{{1, 1}, {0, 1}}, Matrix{{3}, {2}});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Matrix{{1}, {2}}));
}

TEST(Matrix, SolveInconsistent) {
  EXPECT_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Matrix{{1}, {2}}));
}

TEST(Matrix, NullspaceOfRow) {
  Matrix k = nullspace(Matrix{{1, 2}});
  ASSERT_EQ(k.cols(), 1u);
  // proportional to (-2, 1)
  EXPECT_EQ(k(0, 0) * Scalar(1) - k(1, 0) * Scalar(-2), Scalar(0));
  EXPECT_FALSE(k(1, 0).is_zero());
}

TEST(Matrix, InverseRoundTrip) {
  Matrix m{{2, 1, 0}, {0, 1, 5}, {3, 0, 1}};
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix::identity(3));
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST(Matrix, EmptyShapes) {
  Matrix a(0, 3), b(3, 2);
  EXPECT_EQ((a * b).rows(), 0u);
  EXPECT_EQ(rank(Matrix(2, 0)), 0u);
  EXPECT_EQ(nullspace(Matrix(0, 3)).cols(), 3u);
}

// Oracle: Leibniz expansion of det(tI - m) evaluated at several t.
static Scalar det(Matrix m) {
  const std::size_t n = m.rows();
  Scalar d = Scalar::raw(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      Scalar f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

TEST(Matrix, CharpolyMatchesDeterminant) {
  set_seed(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (trial % 3 == 0 && i > j + 1) ? Scalar(0) : random_scalar();
    Vec cp = charpoly(m);
    ASSERT_EQ(cp.size(), n + 1);
    EXPECT_EQ(cp[n], Scalar(1));
    for (int t = 0; t < 4; ++t) {
      Scalar x = random_scalar();
      Matrix shifted = x * Matrix::identity(n) - m;
      EXPECT_EQ(eval_poly(cp, x), det(shifted));
    }
  }
}

TEST(Matrix, RootsOfProduct) {
  // (t - 3)(t + 5) = t^2 + 2t - 15
  auto r = roots(Vec{Scalar(-15), Scalar(2), Scalar(1)});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], Scalar(3));
  EXPECT_EQ(r[1], Scalar(-5));
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(field::set_modulus(32004), Error);
  EXPECT_EQ(field::modulus(), 32003u);
}

TEST(StructAlgebra, TwoByTwoUpperTriangular) {
  StructAlgebra s("T2", {"1", "2"});
  auto e1 = s.add_basis("e1", 0, 0);
  auto e2 = s.add_basis("e2", 1, 1);
  auto a = s.add_basis("a", 0, 1);
  s.finalize_basis({e1, e2});
  EXPECT_NO_THROW(s.check_associative());
  Vec x = s.multiply(s.unit_vector(e1), s.unit_vector(a));
  EXPECT_EQ(x, s.unit_vector(a));
  Vec y = s.multiply(s.unit_vector(a), s.unit_vector(e1));
  EXPECT_TRUE(is_zero_vec(y));
  EXPECT_THROW(s.set_product(a, a, {}), Error);
}
