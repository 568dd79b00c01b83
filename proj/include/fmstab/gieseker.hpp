/**
 * @file gieseker.hpp
 * @brief Gieseker comparisons for fiber-like polarisations, decided exactly.
 *
 * "For n >> 0" is always the eventual sign of an exact polynomial in n (or s
 * on the surface). Each verdict also carries a threshold N0 such that the
 * verdict agrees with direct evaluation at every parameter value n >= N0.
 */

#pragma once

#include "cohomology.hpp"
#include "polynomial.hpp"
#include "slope.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace fmstab {

enum class VerdictKind { destabilizes, neutral, strictly_below };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::destabilizes: return "Destabilizes";
    case VerdictKind::neutral: return "Neutral";
    case VerdictKind::strictly_below: return "StrictlyBelow";
  }
  return "?";
}

/// Outcome of comparing a sub-character against E. witness_index is the
/// position of the deciding coefficient in the comparator's staged list, or
/// -1 when everything ties (Neutral).
struct Verdict {
  VerdictKind kind = VerdictKind::neutral;
  int witness_index = -1;
  std::string criterion = "tie";
  Integer threshold = 1;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline VerdictKind verdict_kind(std::strong_ordering sub_vs_e) {
  if (sub_vs_e == std::strong_ordering::greater) return VerdictKind::destabilizes;
  if (sub_vs_e == std::strong_ordering::less) return VerdictKind::strictly_below;
  return VerdictKind::neutral;
}

inline std::strong_ordering ordering_of(VerdictKind k) {
  switch (k) {
    case VerdictKind::destabilizes: return std::strong_ordering::greater;
    case VerdictKind::strictly_below: return std::strong_ordering::less;
    case VerdictKind::neutral: break;
  }
  return std::strong_ordering::equal;
}

/// Sign of p - q for parameter >> 0 (coefficients compared from the top).
inline std::strong_ordering poly_compare_large_param(const RationalPoly& p, const RationalPoly& q) {
  return compare_large_param(p, q);
}

/// Compares reduced Hilbert polynomials P'/lead(P') and P/lead(P) in m, whose
/// coefficients are polynomials in a formal parameter, for parameter >> 0.
/// Both must have the same degree in m. Returns the order of the first
/// argument relative to the second.
inline std::strong_ordering compare_reduced_hilbert(const Polynomial<RationalPoly>& sub,
                                                    const Polynomial<RationalPoly>& e) {
  if (sub.degree() != e.degree() || e.degree() < 0) {
    throw PreconditionError("reduced Hilbert polynomials of different dimension");
  }
  const int top = e.degree();
  const RationalPoly& lead_sub = sub.leading();
  const RationalPoly& lead_e = e.leading();
  const int sigma = eventual_sign(lead_sub) * eventual_sign(lead_e);
  for (int k = top - 1; k >= 0; --k) {
    const auto uk = static_cast<std::size_t>(k);
    const RationalPoly diff = sub.coefficient(uk) * lead_e - e.coefficient(uk) * lead_sub;
    const int s = sigma * eventual_sign(diff);
    if (s != 0) return to_ordering(s);
  }
  return std::strong_ordering::equal;
}

// -- threefold, dimension 3 -------------------------------------------------

/// (c1.D^2, c1.H.D, ch2.D, ch2.H, chi) each divided by rk (td_1(X) = 0).
struct LexVector3D {
  std::array<Rational, 5> entries;

  friend bool operator==(const LexVector3D&, const LexVector3D&) = default;
};

inline const char* lex3d_criterion(int index) {
  static const char* names[] = {"c1.D^2/rk", "c1.H.D/rk", "ch2.D/rk", "ch2.H/rk", "chi/rk"};
  return names[index];
}

inline LexVector3D lex_vector_3d(const ChernCharacter& ch) {
  require_threefold(ch.geometry(), "lex_vector_3d");
  if (ch.rank() == 0) throw PreconditionError("lex_vector_3d needs nonzero rank");
  const Geometry& g = ch.geometry();
  const RationalClass D = divisor_D(g);
  const RationalClass H = divisor_H(g);
  const Rational rk(ch.rank());
  const RationalClass c1 = ch.c1();
  const RationalClass ch2 = ch.ch(2);
  return LexVector3D{{
      integrate(cup(c1, D, D)) / rk,
      integrate(cup(c1, H, D)) / rk,
      integrate(cup(ch2, D)) / rk,
      integrate(cup(ch2, H)) / rk,
      euler_characteristic(ch) / rk,
  }};
}

/// Lexicographic comparison of the 5-vectors. N0 comes from the differences
/// as they enter the reduced Hilbert polynomial: the m^2 coefficient differs
/// by (d0 n^2 + 2 d1 n)/2, the m coefficient by d2 n + d3, the constant by d4.
inline Verdict destabilizes_3d(const ChernCharacter& sub, const ChernCharacter& e) {
  require_same_geometry(sub.geometry(), e.geometry());
  const LexVector3D vs = lex_vector_3d(sub);
  const LexVector3D ve = lex_vector_3d(e);
  std::array<Rational, 5> delta;
  for (std::size_t k = 0; k < 5; ++k) delta[k] = vs.entries[k] - ve.entries[k];

  Verdict out;
  for (int k = 0; k < 5; ++k) {
    const int s = sgn(delta[static_cast<std::size_t>(k)]);
    if (s == 0) continue;
    out.kind = verdict_kind(to_ordering(s));
    out.witness_index = k;
    out.criterion = lex3d_criterion(k);
    RationalPoly deciding(Variable::n);
    if (k <= 1) {
      deciding = RationalPoly(Variable::n, {Rational(0), 2 * delta[1], delta[0]});
    } else if (k <= 3) {
      deciding = RationalPoly(Variable::n, {delta[3], delta[2]});
    }
    out.threshold = cauchy_threshold(deciding);
    return out;
  }
  return out;
}

// -- threefold, dimension 2 ---------------------------------------------------

/// Pieces of the reduced Hilbert polynomial of a rank-zero class for
/// w = H + nD: P(m) = (m^2/2) B(n) + m A(n) + chi, where
/// A(n) = n ch2.D + ch2.H and B(n) = n^2 c1.D^2 + 2n c1.H.D.
struct TwoDimData {
  RationalPoly a{Variable::n};
  RationalPoly b{Variable::n};
  Rational chi;
};

inline TwoDimData two_dim_data(const ChernCharacter& ch) {
  const Geometry& g = ch.geometry();
  const RationalClass D = divisor_D(g);
  const RationalClass H = divisor_H(g);
  const RationalClass c1 = ch.c1();
  const RationalClass ch2 = ch.ch(2);
  TwoDimData out;
  out.a = RationalPoly(Variable::n, {integrate(cup(ch2, H)), integrate(cup(ch2, D))});
  out.b = RationalPoly(Variable::n,
                       {Rational(0), 2 * integrate(cup(c1, H, D)), integrate(cup(c1, D, D))});
  out.chi = euler_characteristic(ch);
  return out;
}

inline const char* lex2d_criterion(int index) {
  static const char* names[] = {"leading", "n^2", "n^1", "n^0", "chi:n^2", "chi:n^1", "chi:n^0"};
  return names[index];
}

/// Two-dimensional comparison: first sigma (A' B - A B'), a cubic in n, then
/// (only on an identical tie) sigma (chi' B - chi B'), where
/// sigma = eventual sign of B B'. The witness indexes the concatenated
/// coefficient list [n^3, n^2, n^1, n^0 | chi: n^2, n^1, n^0].
inline Verdict destabilizes_2d(const ChernCharacter& sub, const ChernCharacter& e) {
  require_threefold(e.geometry(), "destabilizes_2d");
  require_same_geometry(sub.geometry(), e.geometry());
  if (sub.rank() != 0 || e.rank() != 0) {
    throw PreconditionError("destabilizes_2d expects rank-zero classes");
  }
  const TwoDimData ds = two_dim_data(sub);
  const TwoDimData de = two_dim_data(e);
  if (ds.b.is_zero() || de.b.is_zero()) {
    throw PreconditionError("c1 . w^2 vanishes identically in n; not a 2-dimensional class");
  }
  const int sigma = eventual_sign(ds.b) * eventual_sign(de.b);
  Integer threshold = std::max(cauchy_threshold(ds.b), cauchy_threshold(de.b));

  const RationalPoly stage1 = ds.a * de.b - de.a * ds.b;
  const RationalPoly stage2 = de.b * ds.chi - ds.b * de.chi;

  Verdict out;
  const std::array<std::pair<const RationalPoly*, int>, 2> stages{{{&stage1, 3}, {&stage2, 2}}};
  int offset = 0;
  for (const auto& [poly, top] : stages) {
    if (!poly->is_zero()) {
      const int lead_degree = poly->degree();
      out.kind = verdict_kind(to_ordering(sigma * sgn(poly->leading())));
      out.witness_index = offset + (top - lead_degree);
      out.criterion = lex2d_criterion(out.witness_index);
      out.threshold = std::max(threshold, cauchy_threshold(*poly));
      return out;
    }
    offset += top + 1;
  }
  out.threshold = threshold;
  return out;
}

// -- surface ------------------------------------------------------------------

enum class SurfaceCase { torsion_free, one_dimensional };

inline const char* surface_criterion(SurfaceCase c, int index) {
  if (c == SurfaceCase::torsion_free) {
    static const char* names[] = {"fiber-slope", "h-slope", "chi-rank"};
    return names[index];
  }
  static const char* names[] = {"chi-fiber-degree", "chi-h-degree"};
  return names[index];
}

/// Staged comparison for w = h + s f with s >> 0.
///
/// Torsion-free: a10/rk, then a01/rk, then chi/rk. The m coefficients of the
/// reduced polynomials differ by (d0 s + d1)/s, which fixes N0.
///
/// One-dimensional: the reduced constant term is chi/(a10 s + a01), so the
/// sign of sigma (chi'(a10 s + a01) - chi(a10' s + a01')) decides; its s
/// coefficient is the chi-versus-fiber-degree test, its constant the
/// chi-versus-h-degree test.
inline Verdict surface_compare(const ChernCharacter& sub, const ChernCharacter& e, SurfaceCase c,
                               ChiConvention conv = ChiConvention::riemann_roch) {
  require_surface(e.geometry(), "surface_compare");
  require_same_geometry(sub.geometry(), e.geometry());
  const Rational chi_sub = euler_characteristic(sub, conv);
  const Rational chi_e = euler_characteristic(e, conv);
  Verdict out;

  if (c == SurfaceCase::torsion_free) {
    if (sub.rank() == 0 || e.rank() == 0) {
      throw PreconditionError("torsion-free comparison needs nonzero ranks");
    }
    const Rational rs(sub.rank());
    const Rational re(e.rank());
    const std::array<Rational, 3> delta{
        Rational(sub(1, 0)) / rs - Rational(e(1, 0)) / re,
        Rational(sub(0, 1)) / rs - Rational(e(0, 1)) / re,
        chi_sub / rs - chi_e / re,
    };
    for (int k = 0; k < 3; ++k) {
      const int sign = sgn(delta[static_cast<std::size_t>(k)]);
      if (sign == 0) continue;
      out.kind = verdict_kind(to_ordering(sign));
      out.witness_index = k;
      out.criterion = surface_criterion(c, k);
      if (k <= 1) out.threshold = cauchy_threshold(RationalPoly(Variable::s, {delta[1], delta[0]}));
      return out;
    }
    return out;
  }

  if (sub.rank() != 0 || e.rank() != 0) {
    throw PreconditionError("one-dimensional comparison needs rank-zero classes");
  }
  if (e(1, 0) == 0) throw PreconditionError("one-dimensional comparison needs c1(E) . f != 0");
  const RationalPoly den_sub(Variable::s, {Rational(sub(0, 1)), Rational(sub(1, 0))});
  const RationalPoly den_e(Variable::s, {Rational(e(0, 1)), Rational(e(1, 0))});
  if (den_sub.is_zero()) throw PreconditionError("sub-character has c1 = 0");
  const int sigma = eventual_sign(den_sub) * eventual_sign(den_e);
  const RationalPoly deciding = den_e * chi_sub - den_sub * chi_e;
  out.threshold = std::max(cauchy_threshold(den_sub), cauchy_threshold(den_e));
  if (deciding.is_zero()) return out;
  out.kind = verdict_kind(to_ordering(sigma * sgn(deciding.leading())));
  out.witness_index = 1 - deciding.degree();
  out.criterion = surface_criterion(c, out.witness_index);
  out.threshold = std::max(out.threshold, cauchy_threshold(deciding));
  return out;
}

}  // namespace fmstab
