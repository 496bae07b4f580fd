#include "oracles.hpp"

#include "trigdet/matrix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using trigdet::ExactMatrix;
using trigdet::Integer;
using trigdet::Rational;
using trigdet::TrigPoly;

namespace {

ExactMatrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread = 5) {
  std::uniform_int_distribution<int> num(-spread, spread);
  std::uniform_int_distribution<int> den(1, 3);
  return ExactMatrix<Rational>::generate(rows, cols, [&](std::size_t, std::size_t) { return Rational(num(rng), den(rng)); });
}

ExactMatrix<Rational> permutation_matrix(const std::vector<std::size_t>& perm) {
  return ExactMatrix<Rational>::generate(perm.size(), perm.size(),
                                         [&](std::size_t i, std::size_t j) { return perm[i] == j ? 1 : 0; });
}

}  // namespace

TEST(Matrix, ConstructionErrors) {
  EXPECT_THROW(ExactMatrix<Rational>(0, 3), trigdet::DimensionError);
  EXPECT_THROW(ExactMatrix<Rational>(2, 2, {Rational(1)}), trigdet::DimensionError);
  EXPECT_THROW((ExactMatrix<Rational>{{1, 2}, {3}}), trigdet::DimensionError);
  EXPECT_THROW(trigdet::determinant(ExactMatrix<Rational>(2, 3)), trigdet::DimensionError);
}

TEST(Matrix, ProductAndTranspose) {
  const ExactMatrix<Rational> a{{1, 2, 3}, {4, 5, 6}};
  const ExactMatrix<Rational> b{{1, 0}, {0, 1}, {1, 1}};
  EXPECT_EQ(a * b, (ExactMatrix<Rational>{{4, 5}, {10, 11}}));
  EXPECT_EQ(trigdet::transpose(a), (ExactMatrix<Rational>{{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_THROW(a * a, trigdet::DimensionError);
}

TEST(Matrix, SmallDeterminants) {
  EXPECT_EQ(trigdet::determinant(ExactMatrix<Rational>{{Rational(7, 2)}}), Rational(7, 2));
  EXPECT_EQ(trigdet::determinant(ExactMatrix<Rational>{{1, 2}, {3, 4}}), Rational(-2));
  EXPECT_EQ(trigdet::determinant(ExactMatrix<Integer>{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), Integer(6));
}

TEST(Matrix, TrigRingDeterminant) {
  const auto s = TrigPoly::sin();
  const auto c = TrigPoly::cos();
  const ExactMatrix<TrigPoly> rot{{s, c}, {c, -s}};
  EXPECT_EQ(trigdet::determinant(rot), TrigPoly(-1));
  EXPECT_EQ(trigdet::determinant_berkowitz(rot), TrigPoly(-1));
}

TEST(Matrix, ExpansionBerkowitzAndPermutationSumAgree) {
  std::mt19937_64 rng(42);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int t = 0; t < 6; ++t) {
      const auto m = random_matrix(rng, n, n);
      const Rational reference = oracle::leibniz_determinant(m);
      EXPECT_EQ(trigdet::determinant_expansion(m), reference) << n;
      EXPECT_EQ(trigdet::determinant_berkowitz(m), reference) << n;
    }
  }
}

TEST(Matrix, ExpansionAndBerkowitzAgreeOnTrigEntries) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto m = ExactMatrix<TrigPoly>::generate(n, n, [&](std::size_t, std::size_t) { return oracle::random_trig_poly(rng); });
    const auto reference = oracle::leibniz_determinant(m);
    EXPECT_EQ(trigdet::determinant_expansion(m), reference);
    EXPECT_EQ(trigdet::determinant_berkowitz(m), reference);
  }
}

TEST(Matrix, LargeOrderUsesBerkowitzConsistently) {
  std::mt19937_64 rng(9);
  // L * U with L unit lower triangular; det is the product of U's diagonal.
  const std::size_t n = 18;
  auto lower = random_matrix(rng, n, n, 3);
  auto upper = random_matrix(rng, n, n, 3);
  Rational expected = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i) lower(i, j) = 0;
      if (j == i) lower(i, j) = 1;
      if (j < i) upper(i, j) = 0;
      if (j == i) {
        upper(i, j) = Rational(static_cast<long long>(i) + 2, 3);
        expected *= upper(i, j);
      }
    }
  EXPECT_EQ(trigdet::determinant(lower * upper), expected);
}

TEST(Matrix, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = random_matrix(rng, n, n);
    const auto b = random_matrix(rng, n, n);
    EXPECT_EQ(trigdet::determinant(a * b), trigdet::determinant(a) * trigdet::determinant(b));
    EXPECT_EQ(trigdet::determinant(trigdet::transpose(a)), trigdet::determinant(a));
  }
}

TEST(Matrix, PermutationConjugationPreservesDeterminant) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto a = random_matrix(rng, n, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = permutation_matrix(perm);
    EXPECT_EQ(trigdet::determinant(p * a * trigdet::transpose(p)), trigdet::determinant(a));
  }
}

TEST(Matrix, RankKnownCases) {
  EXPECT_EQ(trigdet::rank(ExactMatrix<Rational>{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(trigdet::rank(ExactMatrix<Rational>{{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(trigdet::rank(ExactMatrix<Integer>{{0, 1, 2}, {1, 0, 3}, {1, 1, 5}}), 2u);
  EXPECT_EQ(trigdet::rank(ExactMatrix<Integer>{{0, 2}, {3, 0}}), 2u);
  EXPECT_EQ(trigdet::rank(ExactMatrix<Rational>{{1, 2, 3}, {4, 5, 6}}), 2u);
}

TEST(Matrix, RankInvariantUnderUnitTriangularMultiplication) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const auto m = random_matrix(rng, n, r) * random_matrix(rng, r, n);
      const std::size_t base = trigdet::rank(m);
      EXPECT_LE(base, r);
      auto u = ExactMatrix<Rational>::identity(n);
      for (std::size_t i = 1; i < n; ++i) u(i, i - 1) = Rational(static_cast<long long>(i) - 2);
      EXPECT_EQ(trigdet::rank(u * m), base);
      EXPECT_EQ(trigdet::rank(m * trigdet::transpose(u)), base);
      EXPECT_EQ(base == n, trigdet::determinant(m) != 0);
    }
  }
}

TEST(Matrix, CheckerboardFactorization) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    const std::size_t order = 4 + 2 * static_cast<std::size_t>(t % 3);
    auto h = random_matrix(rng, order, order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        if ((i + j) % 2 == 1) h(i, j) = 0;
    const auto blocks = trigdet::interleave_split(h);
    EXPECT_EQ(blocks.odd(0, 0), h(0, 0));
    EXPECT_EQ(blocks.even(0, 0), h(1, 1));
    EXPECT_EQ(trigdet::determinant(h), trigdet::determinant(blocks.odd) * trigdet::determinant(blocks.even));
  }
}

TEST(Matrix, CheckerboardViolationReportsPosition) {
  ExactMatrix<Rational> h{{1, 0, 2, 0}, {0, 1, 0, 1}, {3, 0, 1, 0}, {0, 1, 5, 1}};
  try {
    trigdet::interleave_split(h);
    FAIL() << "expected DimensionError";
  } catch (const trigdet::DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("(4, 3)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(trigdet::interleave_split(ExactMatrix<Rational>::identity(3)), trigdet::DimensionError);
}

TEST(Matrix, FormattingAndJson) {
  const ExactMatrix<Rational> m{{1, Rational(-1, 2)}, {10, 0}};
  EXPECT_EQ(trigdet::format_matrix(m), "[  1  -1/2 ]\n[ 10     0 ]\n");
  const auto j = trigdet::to_json(m);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["entries"][1], "-1/2");
  EXPECT_EQ(trigdet::ring_pow(Rational(-2), 5), Rational(-32));
  EXPECT_EQ(trigdet::ring_pow(Rational(3), 0), Rational(1));
}

TEST(Matrix, PythagoreanDeterminantCanonicalizes) {
  const auto s = TrigPoly::sin();
  const auto c = TrigPoly::cos();
  EXPECT_EQ(trigdet::determinant(ExactMatrix<TrigPoly>{{s, c}, {-c, s}}), TrigPoly(1));
}

TEST(Matrix, RankOfIdentityAndZero) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(trigdet::rank(ExactMatrix<Integer>::identity(n)), n);
    EXPECT_EQ(trigdet::rank(ExactMatrix<Integer>(n, n)), 0u);
  }
}
