/**
 * @file number.hpp
 * @brief Exact integer/rational scalars and the library's exception types.
 *
 * Every quantity in fmstab is exact. Integers are arbitrary precision and
 * rationals are always kept in lowest terms with a positive denominator.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fmstab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two classes built on different geometries are combined.
class GeometryMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Raised when a lattice fixture violates the abelian-category axioms.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed textual input (rationals, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sgn(const Integer& x) { return x.sign(); }
inline int sgn(const Rational& x) { return x.sign(); }

inline std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline Integer numerator_of(const Rational& x) {
  return boost::multiprecision::numerator(x);
}

inline Integer denominator_of(const Rational& x) {
  return boost::multiprecision::denominator(x);
}

/// Smallest integer >= x.
inline Integer ceil_rational(const Rational& x) {
  Integer num = numerator_of(x);
  Integer den = denominator_of(x);
  Integer q = num / den;  // truncates toward zero
  if (q * den != num && num > 0) ++q;
  return q;
}

inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& x) {
  if (is_integral(x)) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

inline std::string to_string(const Integer& x) { return x.str(); }

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

inline Integer parse_integer_digits(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw ParseError("not a decimal integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace detail

inline Integer parse_integer(std::string_view text) {
  return detail::parse_integer_digits(text);
}

/// Accepts "p" or "p/q" with q != 0; the result is normalized.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer_digits(text));
  }
  Integer num = detail::parse_integer_digits(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw ParseError("denominator must be positive: '" + std::string(text) + "'");
  }
  Integer den = detail::parse_integer_digits(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace fmstab
