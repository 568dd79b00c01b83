#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace fmstab;
using fmstab::testing::Sampler;

namespace {

// c1 . w^(dim-1) / rk straight from integrate and cup.
SlopeValue slope_oracle(const ChernCharacter& v, const DivisorClass& w) {
  const Geometry& g = v.geometry();
  const RationalClass wc = w.as_class(g);
  RationalClass prod = v.c1();
  for (int k = 1; k < g.dimension(); ++k) prod = cup(prod, wc);
  return SlopeValue::ratio(integrate(prod), Rational(v.rank()));
}

}  // namespace

TEST(SlopeValue, TotalOrder) {
  const SlopeValue inf = SlopeValue::plus_infinity();
  EXPECT_GT(inf, SlopeValue::finite(1000000));
  EXPECT_EQ(inf, SlopeValue::plus_infinity());
  EXPECT_LT(SlopeValue::finite(Rational(1, 3)), SlopeValue::finite(Rational(1, 2)));
  EXPECT_EQ(SlopeValue::ratio(6, 2), SlopeValue::finite(3));
  EXPECT_TRUE(SlopeValue::ratio(5, 0).is_infinite());
  EXPECT_EQ(inf.str(), "+inf");
  EXPECT_THROW(inf.value(), PreconditionError);
}

TEST(MuH, Examples) {
  const Geometry g = Geometry::threefold(1);
  EXPECT_EQ(mu_H(ChernCharacter(g, {1, 1, 0, 1, 0, 0}), {1, 1}), SlopeValue::finite(6));
  EXPECT_TRUE(mu_H(ChernCharacter(g, {0, 1, 0, 1, 0, 0}), {1, 1}).is_infinite());
  EXPECT_EQ(mu_H(ChernCharacter(g, {1, 0, 0, 0, 0, 0}), {2, 3}), SlopeValue::finite(0));
  EXPECT_THROW(mu_H(ChernCharacter(g, {1, 0, 0, 0, 0, 0}), {0, 1}), PreconditionError);
}

TEST(MuH, MatchesIntegrateOracle) {
  Sampler s(31);
  for (int k = 0; k < 3000; ++k) {
    const Geometry g = (k % 5 == 0) ? Geometry::surface(s.uniform(0, 3)) : Geometry::threefold(s.uniform(1, 5));
    const ChernCharacter v = s.character(g, 7);
    const DivisorClass w{s.positive_rational(6), s.positive_rational(6)};
    EXPECT_EQ(mu_H(v, w), slope_oracle(v, w));
    EXPECT_EQ(mu_H_of_transform(v, w), slope_oracle(fm_transform(v), w));
  }
}

TEST(MuHTransform, Examples) {
  const Geometry g = Geometry::threefold(1);
  EXPECT_EQ(mu_H_of_transform(ChernCharacter(g, {1, 0, 0, 1, 2, 0}), {1, 1}), SlopeValue::finite(6));
  EXPECT_TRUE(mu_H_of_transform(ChernCharacter(g, {1, 2, 3, 0, 5, 6}), {1, 1}).is_infinite());
  for (int a = 1; a <= 4; ++a) {
    EXPECT_EQ(mu_H_of_transform(ChernCharacter(g, {0, 0, 0, 1, 0, 0}), {a, 5 - a}), SlopeValue::finite(0));
  }
}

TEST(FiberAndStarSlopes, Examples) {
  const Geometry g = Geometry::threefold(1);
  EXPECT_EQ(mu_lower_star(ChernCharacter(g, {0, 0, 0, 2, 3, 7})), SlopeValue::finite(Rational(3, 2)));
  EXPECT_EQ(mu_f(ChernCharacter(g, {1, 2, 3, 4, 5, 6})), SlopeValue::finite(4));
  EXPECT_TRUE(mu_upper_star(ChernCharacter(g, {0, 2, 3, 4, 5, 6})).is_infinite());
  EXPECT_THROW(mu_lower_star(ChernCharacter(Geometry::surface(1), {0, 0, 1, 1})), PreconditionError);
}

// Oracles: c1.f, c1.H.D, ch11.D / ch10.D^2 computed via cup and integrate.
TEST(FiberAndStarSlopes, MatchPairings) {
  Sampler s(32);
  for (int k = 0; k < 1000; ++k) {
    const Geometry g = Geometry::threefold(s.uniform(1, 5));
    const ChernCharacter v = s.character(g, 6);
    const RationalClass D = divisor_D(g);
    const RationalClass H = divisor_H(g);
    const Rational rk(v.rank());
    EXPECT_EQ(mu_f(v), SlopeValue::ratio(integrate(cup(v.c1(), fiber_class(g))), rk));
    EXPECT_EQ(mu_upper_star(v), SlopeValue::ratio(integrate(cup(v.c1(), H, D)), rk));
    const Rational den = integrate(cup(v.component(1, 0), D, D));
    if (den != 0) {
      EXPECT_EQ(mu_lower_star(v), SlopeValue::ratio(integrate(cup(v.component(1, 1), D)), den));
      // mu^* of the transform is 2d times mu_* of the original.
      EXPECT_EQ(mu_upper_star(fm_transform(v)).value(), Rational(2 * g.d()) * mu_lower_star(v).value());
    }
  }
}

TEST(Trichotomy, SignOfFiberDegree) {
  const Geometry g = Geometry::threefold(1);
  EXPECT_EQ(slope_trichotomy(ChernCharacter(g, {1, 0, 0, 2, 0, 0})), FiberSlopeClass::predict_wit0);
  EXPECT_EQ(slope_trichotomy(ChernCharacter(g, {1, 5, 5, 0, 1, 1})), FiberSlopeClass::predict_boundary);
  EXPECT_EQ(slope_trichotomy(ChernCharacter(g, {1, 0, 0, -2, 0, 0})), FiberSlopeClass::predict_wit1);
  EXPECT_EQ(slope_trichotomy(ChernCharacter(g, {-1, 0, 0, 2, 0, 0})), FiberSlopeClass::predict_wit1);
  EXPECT_THROW(slope_trichotomy(ChernCharacter(g, {0, 0, 0, 2, 0, 0})), PreconditionError);
  EXPECT_STREQ(to_string(FiberSlopeClass::predict_boundary), "PredictBoundary");
}
