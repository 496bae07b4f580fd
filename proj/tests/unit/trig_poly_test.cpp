#include "oracles.hpp"

#include "trigdet/combinatorics.hpp"
#include "trigdet/trig_poly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using trigdet::Rational;
using trigdet::TrigKind;
using trigdet::TrigPoly;
using trigdet::XCPoly;

namespace {

const TrigPoly s = TrigPoly::sin();
const TrigPoly c = TrigPoly::cos();
const TrigPoly x = TrigPoly::x();

TrigPoly k(long long v) { return TrigPoly(Rational(v)); }

}  // namespace

TEST(TrigRing, PythagoreanRelationReduces) {
  EXPECT_EQ(s * s + c * c, TrigPoly(1));
  EXPECT_EQ(s * s, TrigPoly(1) - c * c);
  EXPECT_EQ(s * s * s, s - s * c * c);
}

TEST(TrigRing, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const auto a = oracle::random_trig_poly(rng);
    const auto b = oracle::random_trig_poly(rng);
    const auto d = oracle::random_trig_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(TrigRing, BasicDerivatives) {
  EXPECT_EQ(trigdet::differentiate(s), c);
  EXPECT_EQ(trigdet::differentiate(c), -s);
  EXPECT_EQ(trigdet::differentiate(x), TrigPoly(1));
  EXPECT_TRUE(trigdet::differentiate(TrigPoly(Rational(5, 3))).is_zero());
}

TEST(TrigRing, LeibnizRule) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto u = oracle::random_trig_poly(rng);
    const auto v = oracle::random_trig_poly(rng);
    EXPECT_EQ(trigdet::differentiate(u * v), trigdet::differentiate(u) * v + u * trigdet::differentiate(v));
  }
}

TEST(TrigRing, KnownDerivatives) {
  const auto x_sin = trigdet::basis_element(1, TrigKind::Sin);
  EXPECT_EQ(trigdet::apply_d(4, x_sin), x * s - k(4) * c);
  EXPECT_EQ(trigdet::apply_d2_plus_1(1, x_sin), k(2) * c);
  EXPECT_EQ(trigdet::apply_d2_plus_1(2, trigdet::basis_element(2, TrigKind::Sin)), k(-8) * s);
  EXPECT_EQ(trigdet::apply_d(1, trigdet::basis_element(2, TrigKind::Cos)), k(2) * x * c - x * x * s);
}

TEST(TrigRing, Annihilation) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (auto kind : {TrigKind::Sin, TrigKind::Cos}) {
      const auto f = trigdet::basis_element(n, kind);
      EXPECT_TRUE(trigdet::apply_d2_plus_1(n + 1, f).is_zero()) << n;
      for (unsigned k = 0; k <= n; ++k) EXPECT_FALSE(trigdet::apply_d2_plus_1(k, f).is_zero()) << n << "," << k;
    }
  }
}

TEST(TrigRing, InitialConditions) {
  for (unsigned n = 0; n <= 6; ++n) {
    const auto f = trigdet::basis_element(n, TrigKind::Sin);
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(trigdet::eval_at_zero(trigdet::apply_d(k, f)), Rational(0));
    // first nonvanishing derivative: D^{n+1}(x^n sin x)(0) = (n+1)!
    EXPECT_EQ(trigdet::eval_at_zero(trigdet::apply_d(n + 1, f)), Rational(trigdet::factorial(n + 1)));
  }
}

TEST(TrigRing, DerivativeAgreesWithFiniteDifference) {
  std::mt19937_64 rng(3);
  const long double h = 1e-5L;
  for (int t = 0; t < 30; ++t) {
    const auto u = oracle::random_trig_poly(rng);
    const auto du = trigdet::differentiate(u);
    for (long double x0 : {0.3L, 0.7L, 1.1L}) {
      const long double exact = oracle::evaluate(du, x0);
      const long double approx = oracle::central_difference(u, x0, h);
      const long double scale = std::max({1.0L, std::fabs(exact), std::fabs(oracle::evaluate(u, x0))});
      EXPECT_LE(std::fabs(exact - approx) / scale, 1e-6L) << trigdet::to_string(u) << " at " << static_cast<double>(x0);
    }
  }
}

TEST(TrigRing, ConstantsAndEvaluation) {
  EXPECT_EQ(trigdet::is_constant(TrigPoly(Rational(-3, 4))), Rational(-3, 4));
  EXPECT_EQ(trigdet::is_constant(TrigPoly()), Rational(0));
  EXPECT_FALSE(trigdet::is_constant(c).has_value());
  EXPECT_FALSE(trigdet::is_constant(s).has_value());
  EXPECT_EQ(trigdet::eval_at_zero(k(3) * c + x + s), Rational(3));
}

TEST(TrigRing, Rendering) {
  EXPECT_EQ(trigdet::to_string(TrigPoly()), "0");
  EXPECT_EQ(trigdet::to_string(s * x * x - k(4) * x * c + TrigPoly(Rational(1, 2))), "s*x^2 - 4*x*c + 1/2");
  EXPECT_EQ(trigdet::to_string(-s), "-s");
  EXPECT_EQ(trigdet::to_string(TrigPoly(Rational(-2, 3)) * c * c), "-2/3*c^2");
}
