/**
 * @file cohomology.hpp
 * @brief The algebraic cohomology ring of X = C x S (resp. C x T) in the
 *        Kunneth basis e_i (x) f_j, Chern characters, Todd-twisted Euler
 *        characteristics and Hilbert polynomials.
 *
 * Basis conventions. On the elliptic curve C, e_0 = 1 and e_1 = [pt]. On the
 * K3 surface S, f_0 = 1, f_1 = H_S and f_2 = [pt]; on the curve T, f_0 = 1 and
 * f_1 = [pt]. The class e_i (x) f_j has complex codimension i + j, so entries
 * on one antidiagonal of the coefficient matrix share a degree.
 *
 * Named divisors: D = e_0 (x) f_1 (pull-back of H_S, resp. the fiber f on the
 * surface) and H = e_1 (x) f_0 (the section {c} x S, resp. h).
 */

#pragma once

#include "geometry.hpp"
#include "number.hpp"
#include "polynomial.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fmstab {

/// Coefficients on the basis e_i (x) f_j over an exact ring T (Rational for
/// numeric work, RationalPoly when the polarisation is kept formal).
template <class T>
class CohClass {
 public:
  static constexpr int kMaxCols = 3;

  explicit CohClass(Geometry geometry) : geometry_(geometry) { coeffs_.fill(T{}); }

  static CohClass basis(Geometry geometry, int i, int j, T coefficient) {
    CohClass out(geometry);
    out.at(i, j) = std::move(coefficient);
    return out;
  }

  const Geometry& geometry() const { return geometry_; }

  bool valid_index(int i, int j) const {
    return i >= 0 && i <= 1 && j >= 0 && j < geometry_.base_rank();
  }

  const T& operator()(int i, int j) const { return coeffs_[slot(i, j)]; }
  T& at(int i, int j) { return coeffs_[slot(i, j)]; }

  /// Coefficient of the top class e_1 (x) f_top.
  const T& top() const { return (*this)(1, geometry_.base_top()); }

  bool is_zero() const {
    for (const T& c : coeffs_) {
      if (!detail::is_zero_value(c)) return false;
    }
    return true;
  }

  /// The part of cohomological codimension k (i + j = k).
  CohClass degree_part(int k) const {
    CohClass out(geometry_);
    for (int i = 0; i <= 1; ++i) {
      const int j = k - i;
      if (valid_index(i, j)) out.at(i, j) = (*this)(i, j);
    }
    return out;
  }

  CohClass& operator+=(const CohClass& o) {
    require_same_geometry(geometry_, o.geometry_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  CohClass& operator-=(const CohClass& o) {
    require_same_geometry(geometry_, o.geometry_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  CohClass& operator*=(const T& scalar) {
    for (T& c : coeffs_) c = c * scalar;
    return *this;
  }
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const T& s) { return a *= s; }
  friend CohClass operator*(const T& s, CohClass a) { return a *= s; }
  CohClass operator-() const {
    CohClass out(geometry_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
  }

  friend bool operator==(const CohClass& a, const CohClass& b) {
    return a.geometry_ == b.geometry_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t slot(int i, int j) const {
    if (!valid_index(i, j)) {
      throw PreconditionError("basis index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not valid on " + geometry_.describe());
    }
    return static_cast<std::size_t>(i * kMaxCols + j);
  }

  Geometry geometry_;
  std::array<T, 2 * kMaxCols> coeffs_;
};

using RationalClass = CohClass<Rational>;

namespace detail {

// e_i1 * e_i2 on the elliptic curve: 1 * x = x, [pt] * [pt] = 0.
inline std::int64_t curve_factor(int i1, int i2) { return i1 + i2 <= 1 ? 1 : 0; }

// f_j1 * f_j2 on the second factor, as a multiple of f_{j1+j2}.
inline std::int64_t base_factor(const Geometry& g, int j1, int j2) {
  if (j1 + j2 > g.base_top()) return 0;
  if (j1 == 0 || j2 == 0) return 1;
  // Only the K3 has a middle class: H_S . H_S = 2d [pt].
  return 2 * g.d();
}

}  // namespace detail

/// Cup product. The Kunneth isomorphism is a ring map, so
/// (e_i1 (x) f_j1)(e_i2 (x) f_j2) = (e_i1 e_i2) (x) (f_j1 f_j2).
template <class T>
CohClass<T> cup(const CohClass<T>& u, const CohClass<T>& v) {
  require_same_geometry(u.geometry(), v.geometry());
  const Geometry& g = u.geometry();
  CohClass<T> out(g);
  for (int i1 = 0; i1 <= 1; ++i1) {
    for (int j1 = 0; j1 < g.base_rank(); ++j1) {
      if (detail::is_zero_value(u(i1, j1))) continue;
      for (int i2 = 0; i2 <= 1; ++i2) {
        for (int j2 = 0; j2 < g.base_rank(); ++j2) {
          if (detail::is_zero_value(v(i2, j2))) continue;
          const std::int64_t factor =
              detail::curve_factor(i1, i2) * detail::base_factor(g, j1, j2);
          if (factor == 0) continue;
          out.at(i1 + i2, j1 + j2) += u(i1, j1) * v(i2, j2) * Rational(factor);
        }
      }
    }
  }
  return out;
}

template <class T, class... Rest>
CohClass<T> cup(const CohClass<T>& u, const CohClass<T>& v, const Rest&... rest) {
  return cup(cup(u, v), rest...);
}

/// Degree of X: the coefficient of the top class.
template <class T>
T integrate(const CohClass<T>& u) {
  return u.top();
}

inline RationalClass basis_class(const Geometry& g, int i, int j) {
  return RationalClass::basis(g, i, j, Rational(1));
}

inline RationalClass unit_class(const Geometry& g) { return basis_class(g, 0, 0); }

/// D = e_0 (x) f_1: pull-back of H_S on the threefold, the fiber class f on
/// the surface.
inline RationalClass divisor_D(const Geometry& g) { return basis_class(g, 0, 1); }

/// H = e_1 (x) f_0: the section {c} x S, resp. the horizontal section h.
inline RationalClass divisor_H(const Geometry& g) { return basis_class(g, 1, 0); }

/// Class of a fiber C x {s} of the projection to the second factor.
inline RationalClass fiber_class(const Geometry& g) { return basis_class(g, 0, g.base_top()); }

/// td(X) = td(C) td(S) = 1 + 2[pt_S] on C x S; 1 + (1 - g)[pt_T] on C x T.
inline RationalClass todd_class(const Geometry& g) {
  RationalClass td = unit_class(g);
  if (g.is_threefold()) {
    td.at(0, 2) = 2;
  } else {
    td.at(0, 1) = Rational(1 - g.genus());
  }
  return td;
}

/// Lifts a numeric class to constant polynomial coefficients.
inline CohClass<RationalPoly> lift(const RationalClass& c, Variable var) {
  CohClass<RationalPoly> out(c.geometry());
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j < c.geometry().base_rank(); ++j) {
      out.at(i, j) = RationalPoly::constant(var, c(i, j));
    }
  }
  return out;
}

/// A Chern character: integral coefficients on the Kunneth basis, organised
/// as the 2 x 3 (threefold) or 2 x 2 (surface) matrix (a_ij).
class ChernCharacter {
 public:
  explicit ChernCharacter(Geometry geometry) : geometry_(geometry) { entries_.fill(Integer(0)); }

  /// Entries row-major: a00 a01 [a02] a10 a11 [a12].
  ChernCharacter(Geometry geometry, std::span<const Integer> entries) : ChernCharacter(geometry) {
    const auto cols = static_cast<std::size_t>(geometry.base_rank());
    if (entries.size() != 2 * cols) {
      throw PreconditionError("expected " + std::to_string(2 * cols) + " entries for " +
                              geometry.describe() + ", got " + std::to_string(entries.size()));
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
      at(static_cast<int>(k / cols), static_cast<int>(k % cols)) = entries[k];
    }
  }

  ChernCharacter(Geometry geometry, std::initializer_list<std::int64_t> entries)
      : ChernCharacter(geometry, to_integers(entries)) {}

  const Geometry& geometry() const { return geometry_; }
  int cols() const { return geometry_.base_rank(); }

  const Integer& operator()(int i, int j) const { return entries_[slot(i, j)]; }
  Integer& at(int i, int j) { return entries_[slot(i, j)]; }

  const Integer& rank() const { return (*this)(0, 0); }

  /// Row-major entries (4 or 6 of them).
  std::vector<Integer> entries() const {
    std::vector<Integer> out;
    for (int i = 0; i <= 1; ++i) {
      for (int j = 0; j < cols(); ++j) out.push_back((*this)(i, j));
    }
    return out;
  }

  bool is_zero() const {
    for (const Integer& a : entries_) {
      if (a != 0) return false;
    }
    return true;
  }

  RationalClass as_class() const {
    RationalClass out(geometry_);
    for (int i = 0; i <= 1; ++i) {
      for (int j = 0; j < cols(); ++j) out.at(i, j) = Rational((*this)(i, j));
    }
    return out;
  }

  /// ch_k: the codimension-k part. c1 = ch_1 = a01 D + a10 H.
  RationalClass ch(int k) const { return as_class().degree_part(k); }
  RationalClass c1() const { return ch(1); }

  /// The single component a_ij e_i (x) f_j.
  RationalClass component(int i, int j) const {
    return RationalClass::basis(geometry_, i, j, Rational((*this)(i, j)));
  }

  ChernCharacter& operator+=(const ChernCharacter& o) {
    require_same_geometry(geometry_, o.geometry_);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  ChernCharacter& operator-=(const ChernCharacter& o) {
    require_same_geometry(geometry_, o.geometry_);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
  friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
  friend ChernCharacter operator*(const Integer& k, ChernCharacter a) {
    for (Integer& e : a.entries_) e *= k;
    return a;
  }
  ChernCharacter operator-() const { return Integer(-1) * *this; }

  friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
    return a.geometry_ == b.geometry_ && a.entries_ == b.entries_;
  }

  /// "(a00,a01,a02;a10,a11,a12)"
  std::string str() const {
    std::string out = "(";
    for (int i = 0; i <= 1; ++i) {
      for (int j = 0; j < cols(); ++j) {
        out += (*this)(i, j).str();
        if (j + 1 < cols()) out += ",";
      }
      out += i == 0 ? ";" : ")";
    }
    return out;
  }

 private:
  static std::vector<Integer> to_integers(std::initializer_list<std::int64_t> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
  }

  std::size_t slot(int i, int j) const {
    if (i < 0 || i > 1 || j < 0 || j >= cols()) {
      throw PreconditionError("Chern character index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range on " + geometry_.describe());
    }
    return static_cast<std::size_t>(i * 3 + j);
  }

  Geometry geometry_;
  std::array<Integer, 6> entries_;
};

/// Polarisation alpha D + beta H.
struct DivisorClass {
  Rational alpha;
  Rational beta;

  RationalClass as_class(const Geometry& g) const {
    return divisor_D(g) * alpha + divisor_H(g) * beta;
  }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Ample cone: alpha > 0 and beta > 0 (Nakai-Moishezon on the product).
inline bool is_ample(const DivisorClass& w) { return w.alpha > 0 && w.beta > 0; }

/// Which constant term the surface Euler characteristic uses. riemann_roch is
/// the Todd-twisted integral, chi = a11 + (1 - g) a10; appendix_table reads
/// chi straight off a11 (the two agree when g = 1). On the threefold both are
/// the Riemann-Roch value.
enum class ChiConvention { riemann_roch, appendix_table };

inline RationalClass todd_class(const Geometry& g, ChiConvention conv) {
  if (g.is_surface() && conv == ChiConvention::appendix_table) return unit_class(g);
  return todd_class(g);
}

/// chi(F) = integral of ch(F) td(X): a12 + 2 a10 on the threefold,
/// a11 + (1 - g) a10 on the surface.
inline Rational euler_characteristic(const ChernCharacter& ch,
                                     ChiConvention conv = ChiConvention::riemann_roch) {
  return integrate(cup(ch.as_class(), todd_class(ch.geometry(), conv)));
}

/// First row of the matrix: ch of the restriction to a generic {c} x S.
inline std::vector<Integer> restrict_to_section(const ChernCharacter& ch) {
  std::vector<Integer> out;
  for (int j = 0; j < ch.cols(); ++j) out.push_back(ch(0, j));
  return out;
}

/// First column: ch of the restriction to a generic fiber C x {s}.
inline std::array<Integer, 2> restrict_to_fiber(const ChernCharacter& ch) {
  return {ch(0, 0), ch(1, 0)};
}

namespace detail {

// sum_k m^k / k! * integral( ch . w^k . td )
template <class T>
Polynomial<T> hilbert_from_classes(const CohClass<T>& ch, const CohClass<T>& w,
                                   const CohClass<T>& td) {
  const int dim = ch.geometry().dimension();
  std::vector<T> coeffs;
  CohClass<T> power = cup(ch, td);
  Rational factorial = 1;
  for (int k = 0; k <= dim; ++k) {
    if (k > 0) {
      power = cup(power, w);
      factorial *= k;
    }
    coeffs.push_back(integrate(power) * Rational(Rational(1) / factorial));
  }
  return Polynomial<T>(Variable::m, std::move(coeffs));
}

}  // namespace detail

/// chi(F (x) O(m w)) as an exact polynomial in m, by Riemann-Roch.
inline RationalPoly hilbert_polynomial(const ChernCharacter& ch, const DivisorClass& w,
                                       ChiConvention conv = ChiConvention::riemann_roch) {
  const Geometry& g = ch.geometry();
  return detail::hilbert_from_classes(ch.as_class(), w.as_class(g), todd_class(g, conv));
}

/// Hilbert polynomial for the fiber-like polarisation kept formal:
/// w = beta H + n D on the threefold (parameter n), beta h + s f on the
/// surface (parameter s). Coefficients of m are polynomials in that parameter.
inline Polynomial<RationalPoly> formal_hilbert_polynomial(
    const ChernCharacter& ch, const Rational& beta = 1,
    ChiConvention conv = ChiConvention::riemann_roch) {
  const Geometry& g = ch.geometry();
  const Variable param = g.is_threefold() ? Variable::n : Variable::s;
  CohClass<RationalPoly> w(g);
  w.at(0, 1) = RationalPoly::monomial(param, Rational(1), 1);
  w.at(1, 0) = RationalPoly::constant(param, beta);
  return detail::hilbert_from_classes(lift(ch.as_class(), param), w,
                                      lift(todd_class(g, conv), param));
}

}  // namespace fmstab
