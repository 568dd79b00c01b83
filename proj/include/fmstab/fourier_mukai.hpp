/**
 * @file fourier_mukai.hpp
 * @brief Cohomological action of the relative Fourier-Mukai transform on the
 *        Kunneth lattice.
 *
 * On basis classes the transform sends e_i (x) f_j to (-1)^(i+1) e_(1-i) (x) f_j,
 * so in matrix form the rows swap and the new second row is negated. Applying
 * it twice gives the shift [-1] (the involution iota^* is trivial on this
 * lattice), i.e. minus the identity.
 */

#pragma once

#include "cohomology.hpp"

namespace fmstab {

inline ChernCharacter fm_transform(const ChernCharacter& ch) {
  ChernCharacter out(ch.geometry());
  for (int j = 0; j < ch.cols(); ++j) {
    out.at(0, j) = ch(1, j);
    out.at(1, j) = -ch(0, j);
  }
  return out;
}

/// Inverse transform, -fm_transform(ch).
inline ChernCharacter fm_inverse(const ChernCharacter& ch) { return -fm_transform(ch); }

enum class Wit { wit0, wit1 };

/// Necessary sign condition on ch_{1,c}(F) . D^(2-c) for a sheaf in
/// Coh(pi)_{<= 2-c} that is WIT_1 (<= 0) or WIT_0 (>= 0). Says nothing about
/// sufficiency. Threefold only; c in {0, 1, 2}.
inline bool wit_sign_check(const ChernCharacter& ch, Wit wit, int codim) {
  require_threefold(ch.geometry(), "wit_sign_check");
  if (codim < 0 || codim > 2) {
    throw PreconditionError("codimension must be 0, 1 or 2, got " + std::to_string(codim));
  }
  const Geometry& g = ch.geometry();
  RationalClass pairing = ch.component(1, codim);
  for (int k = 0; k < 2 - codim; ++k) pairing = cup(pairing, divisor_D(g));
  const Rational value = integrate(pairing);
  return wit == Wit::wit1 ? value <= 0 : value >= 0;
}

}  // namespace fmstab
