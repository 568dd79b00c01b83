/**
 * @file slope.hpp
 * @brief Slope values in Q u {+inf} and the slope functions on X.
 *
 *   mu_H   c1 . H^(dim-1) / rk                       (any ample H)
 *   mu_f   c1 . f / rk                               (fiber degree)
 *   mu^*   c1 . H . D / rk        (surface: c1 . h / rk)
 *   mu_*   ch_11 . D / (ch_10 . D^2)                 (threefold only)
 *
 * Each is +inf when its denominator vanishes. All pairings go through the
 * cup product, so they track the basis conventions of cohomology.hpp.
 */

#pragma once

#include "cohomology.hpp"
#include "fourier_mukai.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace fmstab {

class SlopeValue {
 public:
  static SlopeValue finite(Rational v) { return SlopeValue(std::move(v)); }
  static SlopeValue plus_infinity() { return SlopeValue(); }

  /// numerator / denominator, +inf when the denominator is zero.
  static SlopeValue ratio(const Rational& numerator, const Rational& denominator) {
    if (denominator == 0) return plus_infinity();
    return finite(numerator / denominator);
  }

  bool is_infinite() const { return !value_.has_value(); }

  const Rational& value() const {
    if (!value_) throw PreconditionError("slope is +infinity");
    return *value_;
  }

  friend std::strong_ordering operator<=>(const SlopeValue& a, const SlopeValue& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() == b.is_infinite() ? std::strong_ordering::equal
             : a.is_infinite()                  ? std::strong_ordering::greater
                                                : std::strong_ordering::less;
    }
    return compare(*a.value_, *b.value_);
  }

  friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string str() const { return value_ ? to_string(*value_) : std::string("+inf"); }

  friend std::ostream& operator<<(std::ostream& os, const SlopeValue& s) { return os << s.str(); }

 private:
  SlopeValue() = default;
  explicit SlopeValue(Rational v) : value_(std::move(v)) {}

  std::optional<Rational> value_;
};

namespace detail {

inline void require_ample(const DivisorClass& w) {
  if (!is_ample(w)) {
    throw PreconditionError("polarisation (" + to_string(w.alpha) + ", " + to_string(w.beta) +
                            ") is not ample");
  }
}

}  // namespace detail

/// c1 . w^(dim-1) / rk.
inline SlopeValue mu_H(const ChernCharacter& ch, const DivisorClass& w) {
  detail::require_ample(w);
  const Geometry& g = ch.geometry();
  const RationalClass polar = w.as_class(g);
  RationalClass degree = ch.c1();
  for (int k = 1; k < g.dimension(); ++k) degree = cup(degree, polar);
  return SlopeValue::ratio(integrate(degree), Rational(ch.rank()));
}

/// Slope of the transform in closed form, read off the original entries:
/// threefold 2d(-a00 a'^2 + 2 a11 a' b') / a10, surface (a11 b' - a00 a') / a10.
/// Agrees with mu_H(fm_transform(ch), w).
inline SlopeValue mu_H_of_transform(const ChernCharacter& ch, const DivisorClass& w) {
  detail::require_ample(w);
  const Geometry& g = ch.geometry();
  const Rational a00(ch(0, 0));
  const Rational a10(ch(1, 0));
  const Rational a11(ch(1, 1));
  if (g.is_threefold()) {
    const Rational two_d(2 * g.d());
    return SlopeValue::ratio(two_d * (-a00 * w.alpha * w.alpha + a11 * 2 * w.alpha * w.beta), a10);
  }
  return SlopeValue::ratio(a11 * w.beta - a00 * w.alpha, a10);
}

/// Fiber degree over rank.
inline SlopeValue mu_f(const ChernCharacter& ch) {
  const Rational fiber_degree = integrate(cup(ch.c1(), fiber_class(ch.geometry())));
  return SlopeValue::ratio(fiber_degree, Rational(ch.rank()));
}

/// c1 . H . D / rk on the threefold; c1 . h / rk on the surface.
inline SlopeValue mu_upper_star(const ChernCharacter& ch) {
  const Geometry& g = ch.geometry();
  RationalClass degree = cup(ch.c1(), divisor_H(g));
  if (g.is_threefold()) degree = cup(degree, divisor_D(g));
  return SlopeValue::ratio(integrate(degree), Rational(ch.rank()));
}

/// ch_11 . D / (ch_10 . D^2), the slope-like function on sheaves whose
/// Chern character has vanishing first row.
inline SlopeValue mu_lower_star(const ChernCharacter& ch) {
  require_threefold(ch.geometry(), "mu_lower_star");
  const Geometry& g = ch.geometry();
  const RationalClass D = divisor_D(g);
  const Rational numerator = integrate(cup(ch.component(1, 1), D));
  const Rational denominator = integrate(cup(ch.component(1, 0), D, D));
  return SlopeValue::ratio(numerator, denominator);
}

/// Which side of the fiber-degree sign a mu_f-semistable torsion-free class
/// falls on: positive predicts WIT_0, zero the boundary case, negative WIT_1.
enum class FiberSlopeClass { predict_wit0, predict_boundary, predict_wit1 };

inline const char* to_string(FiberSlopeClass c) {
  switch (c) {
    case FiberSlopeClass::predict_wit0: return "PredictWIT0";
    case FiberSlopeClass::predict_boundary: return "PredictBoundary";
    case FiberSlopeClass::predict_wit1: return "PredictWIT1";
  }
  return "?";
}

inline FiberSlopeClass slope_trichotomy(const ChernCharacter& ch) {
  if (ch.rank() == 0) throw PreconditionError("slope_trichotomy needs nonzero rank");
  const int s = sgn(mu_f(ch).value());
  if (s > 0) return FiberSlopeClass::predict_wit0;
  if (s == 0) return FiberSlopeClass::predict_boundary;
  return FiberSlopeClass::predict_wit1;
}

}  // namespace fmstab
