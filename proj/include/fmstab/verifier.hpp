/**
 * @file verifier.hpp
 * @brief Exhaustive checks, over integer boxes, of the identities and
 *        order equivalences that carry stability across the transform.
 *
 * Every suite returns a Report; failures is the number of violated checks
 * and the first few counterexamples are kept verbatim.
 */

#pragma once

#include "cohomology.hpp"
#include "fourier_mukai.hpp"
#include "gieseker.hpp"
#include "positivity.hpp"
#include "slope.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fmstab {

struct CandidateRecord {
  std::string side;
  std::string candidate;
  std::string branch;
  bool pass = true;
};

struct Report {
  std::string suite;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<std::string> counterexamples;
  std::map<std::string, std::int64_t> counters;
  std::vector<CandidateRecord> candidates;

  bool ok() const { return failures == 0; }

  void fail(std::string what) {
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(what));
  }

  static constexpr std::size_t kMaxCounterexamples = 20;
};

namespace detail {

/// Calls fn on every point of [-bound, bound]^count in lexicographic order.
inline void for_each_in_box(int count, std::int64_t bound,
                            const std::function<void(const std::vector<Integer>&)>& fn) {
  if (bound < 0) throw PreconditionError("bound must be nonnegative");
  std::vector<std::int64_t> cur(static_cast<std::size_t>(count), -bound);
  std::vector<Integer> point(static_cast<std::size_t>(count));
  while (true) {
    for (std::size_t k = 0; k < cur.size(); ++k) point[k] = cur[k];
    fn(point);
    int k = count - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == bound) {
      cur[static_cast<std::size_t>(k)] = -bound;
      --k;
    }
    if (k < 0) return;
    ++cur[static_cast<std::size_t>(k)];
  }
}

inline int sign_of(std::strong_ordering o) {
  return o == std::strong_ordering::less ? -1 : (o == std::strong_ordering::greater ? 1 : 0);
}

// Order equivalence of two keys over a set, checked by sorting on the first
// key: the second key must then be nondecreasing and tie exactly where the
// first key ties. This is equivalent to comparing every pair.
template <class K1, class K2>
bool same_order(std::vector<std::pair<K1, K2>> rows, std::string* witness) {
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool tie1 = rows[i - 1].first == rows[i].first;
    const bool tie2 = rows[i - 1].second == rows[i].second;
    const bool up2 = rows[i - 1].second < rows[i].second;
    if (tie1 != tie2 || (!tie1 && !up2)) {
      if (witness) *witness = "ordering mismatch between sorted neighbours " + std::to_string(i - 1) +
                              " and " + std::to_string(i);
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// fm o fm = -id and fm_inverse o fm = id over [-bound, bound]^k, plus the
/// images of the basis classes: e_i f_j goes to (-1)^(i+1) e_(1-i) f_j.
inline Report verify_involution(std::int64_t bound, const Geometry& g) {
  Report r;
  r.suite = "involution";
  const int count = 2 * g.base_rank();
  detail::for_each_in_box(count, bound, [&](const std::vector<Integer>& entries) {
    const ChernCharacter v(g, entries);
    ++r.cases;
    if (!(fm_transform(fm_transform(v)) == -v)) r.fail("fm(fm(v)) != -v for v = " + v.str());
    if (!(fm_inverse(fm_transform(v)) == v)) r.fail("fm_inverse(fm(v)) != v for v = " + v.str());
  });
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j < g.base_rank(); ++j) {
      ChernCharacter basis(g);
      basis.at(i, j) = 1;
      ChernCharacter expected(g);
      expected.at(1 - i, j) = i == 0 ? -1 : 1;
      ++r.counters["basis_checks"];
      if (!(fm_transform(basis) == expected)) {
        r.fail("basis image of e" + std::to_string(i) + "f" + std::to_string(j) + " is " +
               fm_transform(basis).str());
      }
    }
  }
  return r;
}

/// For every v with a10 > 0: mu^*(fm v) = 2d mu_*(v), and the two slopes
/// order the box identically.
inline Report verify_slope_correspondence(std::int64_t bound, std::int64_t d) {
  Report r;
  r.suite = "slopes";
  const Geometry g = Geometry::threefold(d);
  const Rational two_d(2 * d);
  std::vector<std::pair<Rational, Rational>> rows;
  detail::for_each_in_box(6, bound, [&](const std::vector<Integer>& entries) {
    const ChernCharacter v(g, entries);
    if (v(1, 0) <= 0) return;
    ++r.cases;
    const SlopeValue lower = mu_lower_star(v);
    const SlopeValue upper = mu_upper_star(fm_transform(v));
    if (lower.is_infinite() || upper.is_infinite() || upper.value() != two_d * lower.value()) {
      r.fail("mu^*(fm v) != 2d mu_*(v) for v = " + v.str());
      return;
    }
    rows.emplace_back(lower.value(), upper.value());
  });
  std::string witness;
  if (!detail::same_order(std::move(rows), &witness)) r.fail(witness);
  return r;
}

/// For v = (0,0,0;a,b,c) with a > 0: chi(v)/(c1(v).D^2) equals
/// x/(2d) + 1/d where x = ch2(fm v).H / rk(fm v), and the two ratios order
/// every pair identically.
inline Report verify_chi_correspondence(std::int64_t bound, std::int64_t d) {
  Report r;
  r.suite = "chi";
  const Geometry g = Geometry::threefold(d);
  const RationalClass D = divisor_D(g);
  const RationalClass H = divisor_H(g);
  struct Row {
    ChernCharacter v;
    Rational lhs;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      for (std::int64_t c = -bound; c <= bound; ++c) {
        const ChernCharacter v(g, {0, 0, 0, a, b, c});
        const ChernCharacter w = fm_transform(v);
        const Rational lhs = euler_characteristic(v) / integrate(cup(v.c1(), D, D));
        const Rational rhs = integrate(cup(w.ch(2), H)) / Rational(w.rank());
        if (lhs != rhs / Rational(2 * d) + Rational(1, d)) {
          r.fail("affine chi transfer fails for v = " + v.str());
        }
        rows.push_back({v, lhs, rhs});
      }
    }
  }
  for (const Row& x : rows) {
    for (const Row& y : rows) {
      ++r.cases;
      if ((x.lhs <= y.lhs) != (x.rhs <= y.rhs)) {
        r.fail("ordering mismatch for " + x.v.str() + " vs " + y.v.str());
      }
    }
  }
  return r;
}

namespace detail {

inline bool case_passes(const ChernCharacter& ch, int case_id) {
  for (const CaseResult& c : classify_pattern(ch)) {
    if (c.case_id == case_id) return c.pass;
  }
  return true;
}

}  // namespace detail

/// Checks the arithmetic of the two-dimensional / three-dimensional
/// correspondence for a class ch = (0,0,0;a10,a11,a12), in both directions.
///
/// Quotient side: every admissible sub-character M of ch with c1(M).D^2 > 0
/// must get the same verdict from destabilizes_2d(M, ch) and
/// destabilizes_3d(fm M, fm ch), with mu^* = 2d mu_* and the affine chi
/// transfer holding for M. Subs with c1(M).D^2 = 0 are counted under purity.
///
/// Transform side: every admissible sub-character A of fm ch with rk A > 0 is
/// dispatched through the proof's case split. A is a subsheaf of a WIT_1
/// sheaf, so c1(A).D^2 <= 0 is required (else counted as wit1_gated). With
/// A-hat = -fm(A):
///   c1(A).D^2 < 0           -> StrictlyBelow on the first entry;
///   mu_*(A-hat) != mu_*(ch) -> the 3d verdict decides on c1.H.D in the same
///                              direction, with mu^*(A) = 2d mu_*(A-hat);
///   ch2(A).D < 0            -> StrictlyBelow on ch2.D, using
///                              -ch2(A).D = c1(A-hat).H.D (case 1 gate);
///   ch2(A).H/rk differs     -> the 3d verdict on ch2.H agrees with the
///                              chi/(c1.D^2) comparison of A-hat against ch;
///   otherwise               -> chi(A) = -ch02(A-hat).H <= 0 (case 2 gate), so
///                              A does not destabilise.
/// Candidates failing a positivity gate are counted as non_sheaf.
inline Report verify_theorem1_box(const ChernCharacter& ch, std::int64_t bound) {
  require_threefold(ch.geometry(), "verify_theorem1_box");
  if (ch(0, 0) != 0 || ch(0, 1) != 0 || ch(0, 2) != 0 || ch(1, 0) == 0) {
    throw PreconditionError("verify_theorem1_box needs ch = (0,0,0;a10,a11,a12) with a10 != 0, got " +
                            ch.str());
  }
  Report r;
  r.suite = "theorem1";
  const Geometry& g = ch.geometry();
  const Rational two_d(2 * g.d());
  const RationalClass D = divisor_D(g);
  const RationalClass H = divisor_H(g);
  const ChernCharacter e_hat = fm_transform(ch);

  auto record = [&r](const char* side, const ChernCharacter& c, const std::string& branch, bool pass,
                     const std::string& detail_text) {
    ++r.cases;
    ++r.counters[std::string(side) + ":" + branch];
    r.candidates.push_back({side, c.str(), branch, pass});
    if (!pass) r.fail(std::string(side) + " candidate " + c.str() + " [" + branch + "]: " + detail_text);
  };

  auto chi_ratio = [&](const ChernCharacter& v) {
    return euler_characteristic(v) / integrate(cup(v.c1(), D, D));
  };
  auto ch2h_ratio = [&](const ChernCharacter& v) {
    return integrate(cup(v.ch(2), H)) / Rational(v.rank());
  };

  // Quotient side.
  for (const ChernCharacter& m : admissible_subcharacters(ch, bound)) {
    if (m.is_zero()) continue;
    if (m(1, 0) == 0) {
      ++r.counters["quotient:purity"];
      continue;
    }
    const Verdict v2 = destabilizes_2d(m, ch);
    const Verdict v3 = destabilizes_3d(fm_transform(m), e_hat);
    bool pass = v2.kind == v3.kind;
    std::string why = std::string("2d ") + to_string(v2.kind) + " vs 3d " + to_string(v3.kind);
    const SlopeValue lower = mu_lower_star(m);
    const SlopeValue upper = mu_upper_star(fm_transform(m));
    if (!(upper == SlopeValue::finite(two_d * lower.value()))) {
      pass = false;
      why += "; mu^* != 2d mu_*";
    }
    if (chi_ratio(m) != ch2h_ratio(fm_transform(m)) / two_d + Rational(2) / two_d) {
      pass = false;
      why += "; chi transfer";
    }
    record("quotient", m, "verdict-transfer", pass, why);
  }

  // Transform side.
  const SlopeValue mu_lower_f = mu_lower_star(ch);
  const Rational chi_ratio_f = chi_ratio(ch);
  for (const ChernCharacter& a : admissible_subcharacters(e_hat, bound)) {
    if (a.rank() <= 0) continue;
    if (!wit_sign_check(a, Wit::wit1, 0)) {
      ++r.counters["wit1_gated"];
      continue;
    }
    const Verdict v3 = destabilizes_3d(a, e_hat);
    const Rational c1_d2 = integrate(cup(a.c1(), D, D));
    if (c1_d2 < 0) {
      const bool pass = v3.kind == VerdictKind::strictly_below && v3.witness_index == 0;
      record("transform", a, "c1.D^2<0", pass, std::string("3d verdict ") + to_string(v3.kind));
      continue;
    }
    const ChernCharacter a_hat = -fm_transform(a);
    const SlopeValue mu_lower_hat = mu_lower_star(a_hat);
    if (!(mu_upper_star(a) == SlopeValue::finite(two_d * mu_lower_hat.value()))) {
      record("transform", a, "mu-transfer", false, "mu^*(A) != 2d mu_*(A-hat)");
      continue;
    }
    const int s1 = detail::sign_of(mu_lower_hat <=> mu_lower_f);
    if (s1 != 0) {
      const bool pass = v3.witness_index == 1 && detail::sign_of(ordering_of(v3.kind)) == s1;
      record("transform", a, "mu-transfer", pass, std::string("3d verdict ") + to_string(v3.kind));
      continue;
    }
    if (!detail::case_passes(a_hat, 1)) {
      ++r.counters["non_sheaf"];
      continue;
    }
    const Rational ch2_d = integrate(cup(a.ch(2), D));
    if (-ch2_d != integrate(cup(a_hat.c1(), H, D))) {
      record("transform", a, "ch2.D", false, "-ch2(A).D != c1(A-hat).H.D");
      continue;
    }
    if (ch2_d < 0) {
      const bool pass = v3.kind == VerdictKind::strictly_below && v3.witness_index == 2;
      record("transform", a, "ch2.D", pass, std::string("3d verdict ") + to_string(v3.kind));
      continue;
    }
    const int s3 = sgn(ch2h_ratio(a) - ch2h_ratio(e_hat));
    if (s3 != 0) {
      const int s_chi = sgn(chi_ratio(a_hat) - chi_ratio_f);
      const bool pass =
          v3.witness_index == 3 && detail::sign_of(ordering_of(v3.kind)) == s3 && s_chi == s3;
      record("transform", a, "ch2.H-transfer", pass,
             std::string("3d verdict ") + to_string(v3.kind) + ", chi side sign " +
                 std::to_string(s_chi));
      continue;
    }
    if (!detail::case_passes(a_hat, 2)) {
      ++r.counters["non_sheaf"];
      continue;
    }
    const Rational chi_a = euler_characteristic(a);
    const Rational ch02_h = integrate(cup(a_hat.component(0, 2), H));
    const bool identity = chi_a == -ch02_h;
    const bool pass = identity && chi_a <= 0 && v3.kind != VerdictKind::destabilizes;
    record("transform", a, "chi-sign", pass,
           std::string("chi(A) = ") + to_string(chi_a) + ", 3d verdict " + to_string(v3.kind));
  }
  return r;
}

/// Surface: with w = -fm(v), c1(w).f = rk(v) and chi(w) - (1-g) rk(v) =
/// c1(v).h. The correction (1-g) rk(v) is counted under "flagged" whenever it
/// is nonzero; any other discrepancy is a failure.
inline Report verify_surface_identities(std::int64_t bound, std::int64_t genus) {
  Report r;
  r.suite = "surface";
  const Geometry g = Geometry::surface(genus);
  const RationalClass f = fiber_class(g);
  const RationalClass h = divisor_H(g);
  const Rational one_minus_g(1 - genus);
  detail::for_each_in_box(4, bound, [&](const std::vector<Integer>& entries) {
    const ChernCharacter v(g, entries);
    const ChernCharacter w = -fm_transform(v);
    ++r.cases;
    const Rational rk(v.rank());
    if (integrate(cup(w.c1(), f)) != rk) r.fail("c1(w).f != rk(v) for v = " + v.str());
    const Rational chi_w = euler_characteristic(w);
    const Rational c1_h = integrate(cup(v.c1(), h));
    const Rational discrepancy = chi_w - c1_h;
    if (discrepancy != one_minus_g * rk) {
      r.fail("chi(w) - c1(v).h = " + to_string(discrepancy) + " for v = " + v.str());
    }
    if (discrepancy != 0) ++r.counters["flagged"];
    if (v.rank() != 0 && !(mu_upper_star(v) == SlopeValue::finite((chi_w - one_minus_g * rk) / rk))) {
      r.fail("chi(w)/(c1(w).f) != mu^*(v) after correction for v = " + v.str());
    }
  });
  return r;
}

/// Surface: the staged comparison agrees with comparing the full reduced
/// Hilbert polynomials (t = 1) as polynomials in s. Pairs are drawn from the
/// box with a fixed stride so that at most max_pairs of each kind are tested.
inline Report verify_lemma20_table(std::int64_t bound, std::int64_t genus,
                                   std::int64_t max_pairs = 20000,
                                   ChiConvention conv = ChiConvention::riemann_roch) {
  Report r;
  r.suite = "lemma20";
  const Geometry g = Geometry::surface(genus);
  std::vector<ChernCharacter> torsion_free;
  std::vector<ChernCharacter> one_dim;
  detail::for_each_in_box(4, bound, [&](const std::vector<Integer>& entries) {
    const ChernCharacter v(g, entries);
    if (v.rank() > 0) torsion_free.push_back(v);
    if (v.rank() == 0 && (v(1, 0) != 0 || v(0, 1) != 0)) one_dim.push_back(v);
  });

  auto run = [&](const std::vector<ChernCharacter>& pool, SurfaceCase c, const char* label) {
    std::vector<Polynomial<RationalPoly>> polys;
    polys.reserve(pool.size());
    for (const ChernCharacter& v : pool) polys.push_back(formal_hilbert_polynomial(v, 1, conv));
    const std::int64_t n = static_cast<std::int64_t>(pool.size());
    const std::int64_t total = n * n;
    std::int64_t stride = std::max<std::int64_t>(1, total / std::max<std::int64_t>(1, max_pairs));
    if (stride > 1 && stride % 2 == 0) ++stride;
    for (std::int64_t p = 0; p < total; p += stride) {
      const auto i = static_cast<std::size_t>(p / n);
      const auto j = static_cast<std::size_t>(p % n);
      const ChernCharacter& sub = pool[i];
      const ChernCharacter& e = pool[j];
      if (c == SurfaceCase::one_dimensional && e(1, 0) == 0) continue;
      ++r.cases;
      ++r.counters[label];
      const Verdict staged = surface_compare(sub, e, c, conv);
      const std::strong_ordering direct = compare_reduced_hilbert(polys[i], polys[j]);
      if (ordering_of(staged.kind) != direct) {
        r.fail(std::string(label) + " " + sub.str() + " vs " + e.str() + ": staged " +
               to_string(staged.kind) + " at " + staged.criterion);
      }
    }
  };
  run(torsion_free, SurfaceCase::torsion_free, "torsion_free");
  run(one_dim, SurfaceCase::one_dimensional, "one_dimensional");
  return r;
}

// -- threshold evaluation ----------------------------------------------------

/// Order of reduced polynomials P'/lead(P') and P/lead(P) in m for m >> 0,
/// with numeric coefficients.
inline std::strong_ordering compare_reduced_numeric(const RationalPoly& sub, const RationalPoly& e) {
  if (sub.degree() != e.degree() || e.degree() < 0) {
    throw PreconditionError("numeric Hilbert polynomials of different degree");
  }
  for (int k = e.degree() - 1; k >= 0; --k) {
    const auto uk = static_cast<std::size_t>(k);
    const Rational lhs = sub.coefficient(uk) / sub.leading();
    const Rational rhs = e.coefficient(uk) / e.leading();
    if (lhs != rhs) return compare(lhs, rhs);
  }
  return std::strong_ordering::equal;
}

/// Evaluates both Hilbert polynomials at the fiber-like polarisation with the
/// given parameter (H + N D, resp. h + N f) and compares them directly.
inline std::strong_ordering compare_at_parameter(const ChernCharacter& sub, const ChernCharacter& e,
                                                 const Integer& parameter,
                                                 ChiConvention conv = ChiConvention::riemann_roch) {
  const DivisorClass w{Rational(parameter), Rational(1)};
  return compare_reduced_numeric(hilbert_polynomial(sub, w, conv), hilbert_polynomial(e, w, conv));
}

/// True when the verdict agrees with direct evaluation at N0 and N0 + 7.
inline bool verdict_matches_evaluation(const ChernCharacter& sub, const ChernCharacter& e,
                                       const Verdict& v,
                                       ChiConvention conv = ChiConvention::riemann_roch) {
  const std::strong_ordering expected = ordering_of(v.kind);
  return compare_at_parameter(sub, e, v.threshold, conv) == expected &&
         compare_at_parameter(sub, e, v.threshold + 7, conv) == expected;
}

}  // namespace fmstab
