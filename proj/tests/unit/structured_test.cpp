#include "trigdet/structured.hpp"

#include <gtest/gtest.h>

#include <random>

using trigdet::ExactMatrix;
using trigdet::MatrixKind;
using trigdet::MatrixSpec;
using trigdet::Rational;

namespace {

MatrixSpec general(Rational a, Rational b, unsigned n) {
  MatrixSpec spec;
  spec.kind = MatrixKind::BinomGeneral;
  spec.n = n;
  spec.a = std::move(a);
  spec.b = std::move(b);
  return spec;
}

MatrixSpec nodes(std::vector<Rational> xs) {
  MatrixSpec spec;
  spec.kind = MatrixKind::BinomNodes;
  spec.nodes = std::move(xs);
  return spec;
}

// n x n Pascal matrix from the additive rule alone.
ExactMatrix<Rational> pascal_by_addition(std::size_t n) {
  ExactMatrix<Rational> p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    p(i, 0) = 1;
    for (std::size_t j = 1; j <= i; ++j) p(i, j) = p(i - 1, j - 1) + (j < i ? p(i - 1, j) : Rational(0));
  }
  return p;
}

}  // namespace

TEST(Structured, KindNamesRoundTrip) {
  for (const auto& entry : trigdet::kMatrixKindNames) {
    EXPECT_EQ(trigdet::parse_matrix_kind(entry.name), entry.kind);
    EXPECT_EQ(trigdet::to_string(entry.kind), entry.name);
  }
  EXPECT_FALSE(trigdet::parse_matrix_kind("nope").has_value());
}

TEST(Structured, ShiftMatrix) {
  EXPECT_EQ(trigdet::build(MatrixKind::Rk, 3, 1), (ExactMatrix<Rational>{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(trigdet::build(MatrixKind::Rk, 3, 2), (ExactMatrix<Rational>{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}));
  EXPECT_THROW(trigdet::build(MatrixKind::Rk, 3, 3), trigdet::SpecError);
  EXPECT_THROW(trigdet::build(MatrixKind::Rk, 3, 0), trigdet::SpecError);
}

TEST(Structured, SecondShiftMatrix) {
  EXPECT_EQ(trigdet::build(MatrixKind::Ukn, 5, 1),
            (ExactMatrix<Rational>{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}));
  EXPECT_THROW(trigdet::build(MatrixKind::Ukn, 4, 2), trigdet::SpecError);
  EXPECT_THROW(trigdet::build(MatrixKind::Ukn, 2, 1), trigdet::SpecError);
}

TEST(Structured, LowerTriangularT) {
  const auto t = trigdet::build(MatrixKind::TLower, 2);
  ASSERT_EQ(t.rows(), 3u);
  EXPECT_EQ(t(2, 1), Rational(-3, 2));
  EXPECT_EQ(t(1, 0), Rational(-1));
  EXPECT_EQ(t(2, 0), Rational(3, 2));
  EXPECT_EQ(t(0, 2), Rational(0));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(t(i, i), Rational(1));
}

TEST(Structured, BinomialMatrices) {
  EXPECT_EQ(trigdet::build(MatrixKind::BinomB, 1), (ExactMatrix<Rational>{{1, 1}, {1, 3}}));
  EXPECT_EQ(trigdet::build(MatrixKind::BinomC, 1), (ExactMatrix<Rational>{{1, 1}, {2, 4}}));
  EXPECT_EQ(trigdet::build(MatrixKind::G, 1), (ExactMatrix<Rational>{{1, 1}, {0, 2}}));
  EXPECT_EQ(trigdet::build(general(3, 0, 2)), (ExactMatrix<Rational>{{1, 1}, {3, 6}}));
  EXPECT_EQ(trigdet::build(nodes({1, 3, 5})), (ExactMatrix<Rational>{{1, 1, 1}, {1, 3, 5}, {0, 3, 10}}));
}

TEST(Structured, PascalProduct) {
  EXPECT_EQ(trigdet::pascal_product(2), (ExactMatrix<Rational>{{1, 0}, {1, 1}}));
  EXPECT_EQ(trigdet::pascal_product(3), (ExactMatrix<Rational>{{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
  for (unsigned n = 2; n <= 9; ++n) {
    EXPECT_EQ(trigdet::pascal_product(n), pascal_by_addition(n)) << n;
    EXPECT_TRUE(trigdet::verify_pascal_product(n).pass);
  }
}

TEST(Structured, RowShift) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> entry(-9, 9);
  const auto a = ExactMatrix<Rational>::generate(4, 4, [&](std::size_t, std::size_t) { return Rational(entry(rng)); });
  for (unsigned k = 1; k <= 3; ++k) {
    EXPECT_TRUE(trigdet::verify_row_shift(a, k).pass) << k;
    EXPECT_TRUE(trigdet::verify_row_shift(ExactMatrix<Rational>::identity(4), k).pass);
    EXPECT_TRUE(trigdet::verify_row_shift(ExactMatrix<Rational>(4, 4), k).pass);
  }
  EXPECT_EQ(trigdet::build(MatrixKind::Rk, 4, 2) * ExactMatrix<Rational>::identity(4), trigdet::build(MatrixKind::Rk, 4, 2));
}

TEST(Structured, DeterminantIdentities) {
  for (unsigned n = 1; n <= 6; ++n) {
    MatrixSpec b;
    b.kind = MatrixKind::BinomB;
    b.n = n;
    MatrixSpec c = b;
    c.kind = MatrixKind::BinomC;
    EXPECT_TRUE(trigdet::det_identity(b).pass);
    EXPECT_TRUE(trigdet::det_identity(c).pass);
    EXPECT_TRUE(trigdet::verify_TB_equals_G(n).pass);
    EXPECT_TRUE(trigdet::verify_C_from_B(n).pass);
  }
  MatrixSpec b1;
  b1.kind = MatrixKind::BinomB;
  b1.n = 1;
  EXPECT_EQ(trigdet::det_identity(b1).computed, "2");

  const auto g = trigdet::det_identity(general(3, 0, 2));
  EXPECT_TRUE(g.pass);
  EXPECT_EQ(g.computed, "3");

  const auto v = trigdet::det_identity(nodes({1, 3, 5}));
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.computed, "8");

  const auto repeated = trigdet::det_identity(nodes({Rational(1, 2), 3, Rational(1, 2)}));
  EXPECT_TRUE(repeated.pass);
  EXPECT_EQ(repeated.computed, "0");

  const auto degenerate = trigdet::det_identity(general(0, 2, 3));
  EXPECT_TRUE(degenerate.pass);
  EXPECT_EQ(degenerate.computed, "0");
}

TEST(Structured, UnitTriangularDeterminants) {
  for (unsigned n = 2; n <= 7; ++n)
    for (unsigned k = 1; k < n; ++k) EXPECT_EQ(trigdet::determinant(trigdet::build(MatrixKind::Rk, n, k)), Rational(1));
  for (unsigned n = 3; n <= 9; ++n)
    for (unsigned k = 1; k + 1 <= (n + 1) / 2; ++k)
      EXPECT_EQ(trigdet::determinant(trigdet::build(MatrixKind::Ukn, n, k)), Rational(1));
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(trigdet::determinant(trigdet::build(MatrixKind::TLower, n)), Rational(1));
    EXPECT_EQ(trigdet::determinant(trigdet::build(MatrixKind::Bidiagonal, n)), Rational(1));
  }
}

TEST(Structured, CompactRendering) {
  EXPECT_EQ(trigdet::compact(ExactMatrix<Rational>{{1, 0}, {Rational(-1, 2), 1}}), "[[1,0],[-1/2,1]]");
}
