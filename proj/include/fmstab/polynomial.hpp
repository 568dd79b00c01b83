/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact ring, with eventual-sign
 *        ("for all sufficiently large parameter values") comparison.
 *
 * Polynomial<Rational> is the RationalPoly of the Hilbert-polynomial
 * machinery; Polynomial<Polynomial<Rational>> carries a formal polarisation
 * parameter (n or s) inside the coefficients of a polynomial in m.
 */

#pragma once

#include "number.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace fmstab {

enum class Variable : char { m = 'm', n = 'n', s = 's', t = 't' };

inline char variable_name(Variable v) { return static_cast<char>(v); }

template <class T>
class Polynomial;

namespace detail {

inline bool is_zero_value(const Rational& x) { return x == 0; }

template <class T>
bool is_zero_value(const Polynomial<T>& p) {
  return p.is_zero();
}

}  // namespace detail

template <class T>
class Polynomial {
 public:
  using value_type = T;

  explicit Polynomial(Variable var = Variable::m) : var_(var) {}

  /// Coefficients are given lowest degree first.
  Polynomial(Variable var, std::vector<T> coefficients)
      : var_(var), coeffs_(std::move(coefficients)) {
    trim();
  }

  static Polynomial constant(Variable var, T c) {
    return Polynomial(var, std::vector<T>{std::move(c)});
  }

  static Polynomial monomial(Variable var, T c, std::size_t degree) {
    std::vector<T> coeffs(degree + 1, zero_like(c));
    coeffs[degree] = std::move(c);
    return Polynomial(var, std::move(coeffs));
  }

  Variable variable() const { return var_; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const T& leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  T coefficient(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return coeffs_.empty() ? T{} : zero_like(coeffs_.front());
  }

  template <class X>
  auto evaluate(const X& x) const {
    using R = decltype(std::declval<T>() * x);
    R acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + R(*it);
    }
    return acc;
  }

  template <class X>
  auto operator()(const X& x) const {
    return evaluate(x);
  }

  Polynomial operator-() const {
    Polynomial out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) {
    var_ = merged_variable(*this, other);
    if (coeffs_.size() < other.coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size(), zero_like(other.coeffs_.front()));
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) { return *this += -other; }

  Polynomial& operator*=(const T& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& scalar) { return a *= scalar; }
  friend Polynomial operator*(const T& scalar, Polynomial a) { return a *= scalar; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(merged_variable(a, b));
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, zero_like(a.coeffs_.front()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.trim();
    return out;
  }

  /// Variables are compared only when both sides are non-constant.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    return a.degree() <= 0 || a.var_ == b.var_;
  }

 private:
  static T zero_like(const T& sample) {
    if constexpr (std::is_same_v<T, Rational>) {
      (void)sample;
      return Rational(0);
    } else {
      return T(sample.variable());
    }
  }

  static Variable merged_variable(const Polynomial& a, const Polynomial& b) {
    if (a.degree() > 0 && b.degree() > 0 && a.var_ != b.var_) {
      throw PreconditionError(std::string("polynomial variable mismatch: ") +
                              variable_name(a.var_) + " vs " + variable_name(b.var_));
    }
    return a.degree() > 0 ? a.var_ : b.var_;
  }

  void trim() {
    while (!coeffs_.empty() && detail::is_zero_value(coeffs_.back())) coeffs_.pop_back();
  }

  Variable var_;
  std::vector<T> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

/// Sign of p(x) for every sufficiently large x.
inline int eventual_sign(const RationalPoly& p) {
  return p.is_zero() ? 0 : sgn(p.leading());
}

/// Sign of p - q for all sufficiently large parameter values. Both sides must
/// be polynomials in the same formal parameter.
inline std::strong_ordering compare_large_param(const RationalPoly& p, const RationalPoly& q) {
  if (p.variable() != q.variable()) {
    throw PreconditionError(std::string("cannot compare polynomials in ") +
                            variable_name(p.variable()) + " and " +
                            variable_name(q.variable()));
  }
  return to_ordering(eventual_sign(p - q));
}

/// An integer N >= 1 beyond which p has no real root, so sign(p(x)) equals
/// eventual_sign(p) for every x >= N. Uses the Cauchy root bound
/// 1 + max |c_i / c_lead|.
inline Integer cauchy_threshold(const RationalPoly& p) {
  if (p.degree() <= 0) return Integer(1);
  const Rational& lead = p.leading();
  Rational worst = 0;
  for (int k = 0; k < p.degree(); ++k) {
    worst = std::max(worst, abs_value(Rational(p.coefficients()[static_cast<std::size_t>(k)] / lead)));
  }
  Integer bound = ceil_rational(Rational(1) + worst);
  return bound < 1 ? Integer(1) : bound;
}

namespace detail {

inline std::string coefficient_text(const Rational& c) { return to_string(c); }

template <class T>
std::string coefficient_text(const Polynomial<T>& c);

}  // namespace detail

/// Human-readable form, highest degree first, e.g. "2*n^2*m^2 + 2".
template <class T>
std::string to_string(const Polynomial<T>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const T& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (detail::is_zero_value(c)) continue;
    std::string coeff = detail::coefficient_text(c);
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += coeff + "*";
    out += variable_name(p.variable());
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace detail {

template <class T>
std::string coefficient_text(const Polynomial<T>& c) {
  if (c.degree() <= 0) return to_string(c);
  return "(" + to_string(c) + ")";
}

}  // namespace detail

}  // namespace fmstab
