#include "helpers.hpp"

#include "modbrick/error.hpp"
#include "modbrick/linalg.hpp"

#include <gtest/gtest.h>

using namespace modbrick;
using testing_util::mat;

TEST(Field, PrimeFieldArithmetic) {
  const FieldSpec f = gf_make(5, 1);
  EXPECT_EQ(f.order(), 5u);
  EXPECT_EQ(f.from_int(3) * f.from_int(4), f.from_int(2));
  EXPECT_EQ(f.from_int(-1), f.from_int(4));
  EXPECT_EQ(f.from_int(2).inverse(), f.from_int(3));
}

TEST(Field, Gf4MatchesPolynomialOracle) {
  const FieldSpec f = gf_make(2, 2);
  EXPECT_EQ(f.modulus(), (std::vector<int>{1, 1, 1}));
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      EXPECT_EQ((f.from_code(a) * f.from_code(b)).code(), testing_util::gf4_mul(a, b));
      EXPECT_EQ((f.from_code(a) + f.from_code(b)).code(), a ^ b);
    }
}

TEST(Field, Gf9FromXSquaredPlusOne) {
  const FieldSpec f = gf_make(3, 2, std::vector<int>{1, 0, 1});
  EXPECT_EQ(f.order(), 9u);
  const FieldElem x = f.from_coeffs(std::vector<int>{0, 1});
  EXPECT_EQ(x * x, f.from_int(-1));
  for (const auto& e : f.elements())
    if (!e.is_zero()) EXPECT_TRUE(e.pow(8).is_one());
}

TEST(Field, RejectsBadModuli) {
  EXPECT_THROW(gf_make(4, 1), Error);
  try {
    gf_make(3, 2, std::vector<int>{1, 1, 0, 1});  // wrong degree
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidModulus);
  }
  try {
    gf_make(2, 2, std::vector<int>{1, 0, 1});  // (x+1)^2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleModulus);
  }
}

TEST(Field, DefaultModuliAreLeastIrreducible) {
  EXPECT_EQ(gf_make(2, 3).modulus(), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(gf_make(2, 4).modulus(), (std::vector<int>{1, 1, 0, 0, 1}));
}

TEST(Field, EmbeddingIsARingMap) {
  const FieldSpec small = gf_make(2, 2), big = gf_make(2, 4);
  const FieldEmbedding emb(small, big);
  for (const auto& a : small.elements())
    for (const auto& b : small.elements()) {
      EXPECT_EQ(emb(a * b), emb(a) * emb(b));
      EXPECT_EQ(emb(a + b), emb(a) + emb(b));
    }
  EXPECT_THROW(FieldEmbedding(gf_make(2, 2), gf_make(2, 3)), Error);
}

TEST(Field, UntaggedScalarsReduceIntoTheField) {
  // Eigen hands in alpha = -1 for A -= B * C
  const FieldSpec f = gf_make(3, 1);
  const FieldElem two = f.from_int(2);
  EXPECT_EQ(two * FieldElem(-1), f.from_int(1));
  EXPECT_EQ(FieldElem(-1) + two, f.from_int(1));
  Matrix a = mat(f, 2, 2, {1, 2, 0, 1});
  const Matrix b = mat(f, 2, 2, {2, 1, 1, 1});
  a -= b * b;
  Matrix want = mat(f, 2, 2, {1, 2, 0, 1});
  const Matrix bb = b * b;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) EXPECT_EQ(a(i, j), want(i, j) - bb(i, j));
}

TEST(Linalg, IdentityAndZero) {
  const FieldSpec f = gf_make(2, 1);
  const auto r = rref(identity(f, 3));
  EXPECT_EQ(r.rank, 3);
  EXPECT_EQ(r.kernel.cols(), 0);
  const auto z = rref(zeros(f, 2, 3));
  EXPECT_EQ(z.rank, 0);
  EXPECT_EQ(z.kernel.cols(), 3);
}

TEST(Linalg, Gf4RankOneExample) {
  // [[1, w], [w, w^2]] with w the class of x: the second row is w times the first
  const FieldSpec f = gf_make(2, 2);
  const Matrix a = mat(f, 2, 2, {1, 2, 2, 3});
  const auto r = rref(a);
  EXPECT_EQ(r.rank, 1);
  ASSERT_EQ(r.kernel.cols(), 1);
  // oracle: exactly 4 of the 16 vectors lie in the kernel
  int count = 0;
  for (std::uint32_t u = 0; u < 4; ++u)
    for (std::uint32_t v = 0; v < 4; ++v) {
      const std::uint32_t r0 = u ^ testing_util::gf4_mul(2, v);
      const std::uint32_t r1 = testing_util::gf4_mul(2, u) ^ testing_util::gf4_mul(3, v);
      count += r0 == 0 && r1 == 0;
    }
  EXPECT_EQ(count, 4);
  const Vector k = r.kernel.col(0);
  EXPECT_TRUE(is_zero_matrix(Matrix(a * k)));
}

TEST(Linalg, SolveConventions) {
  const FieldSpec f = gf_make(2, 1);
  Vector b(2);
  b << f.one(), f.zero();
  const auto x = solve_linear(identity(f, 2), b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)(0), f.one());
  EXPECT_FALSE(solve_linear(zeros(f, 2, 2), b));
  const auto y = solve_linear(mat(f, 2, 2, {1, 1, 0, 0}), b);
  ASSERT_TRUE(y);
  EXPECT_EQ((*y)(0), f.one());
  EXPECT_EQ((*y)(1), f.zero());
}

TEST(Linalg, ColumnSpaceIsCanonical) {
  const FieldSpec f = gf_make(3, 1);
  const Matrix a = mat(f, 3, 2, {1, 0, 1, 1, 0, 2});
  const Matrix b = mat(f, 3, 2, {2, 1, 0, 2, 2, 2});  // 2a1 + a2, a1 + a2
  EXPECT_EQ(column_space(a).cols(), 2);
  EXPECT_TRUE(column_space(a) == column_space(b));
}
