/**
 * @file positivity.hpp
 * @brief Sign constraints that the Chern character of a coherent sheaf on
 *        C x S must satisfy, keyed on which entries vanish.
 *
 * These are necessary conditions only. A class that passes every matched case
 * need not be the Chern character of any sheaf.
 */

#pragma once

#include "cohomology.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmstab {

using EntryIndex = std::pair<int, int>;

inline std::string entry_name(EntryIndex e) {
  return "a" + std::to_string(e.first) + std::to_string(e.second);
}

struct PatternCase {
  int id;
  std::vector<EntryIndex> zeros;
  std::vector<EntryIndex> nonnegative;
  const char* support;
};

/// The eight vanishing patterns and what each forces.
inline const std::array<PatternCase, 8>& pattern_cases() {
  static const std::array<PatternCase, 8> table{{
      {1, {{0, 0}}, {{0, 1}, {1, 0}}, "torsion"},
      {2, {{0, 0}, {0, 1}}, {{0, 2}, {1, 0}}, "F|_s is 0-dimensional for all but finitely many s"},
      {3, {{0, 0}, {0, 1}, {0, 2}}, {{1, 0}}, "F|_s is 0-dimensional for all s"},
      {4, {{0, 0}, {1, 0}}, {{0, 1}}, "F|_s = 0 for general s"},
      {5, {{0, 0}, {0, 1}, {1, 0}}, {{0, 2}, {1, 1}}, "supported in dimension at most 1"},
      {6, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {{0, 2}}, "supported on finitely many fibers"},
      {7, {{0, 0}, {0, 1}, {0, 2}, {1, 0}}, {},
       "supported in dimension at most 1, F|_s 0-dimensional for all s"},
      {8, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}}, {{1, 2}}, "supported at finitely many points"},
  }};
  return table;
}

namespace detail {

/// Sign of the intersection number that detects a_ij: a_ij e_i f_j paired
/// with the complementary class e_(1-i) f_(2-j). Every such pairing is a
/// positive multiple of a_ij (1 or 2d), read off the ring once per geometry.
inline std::array<int, 6> pairing_signs(const Geometry& g) {
  std::array<int, 6> out{};
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 2; ++j) {
      const Rational w = integrate(cup(basis_class(g, i, j), basis_class(g, 1 - i, 2 - j)));
      out[static_cast<std::size_t>(i * 3 + j)] = sgn(w);
    }
  }
  return out;
}

inline int entry_sign(const std::array<int, 6>& signs, const ChernCharacter& ch, EntryIndex e) {
  return sgn(ch(e.first, e.second)) * signs[static_cast<std::size_t>(e.first * 3 + e.second)];
}

}  // namespace detail

struct CaseResult {
  int case_id;
  bool pass;
  std::optional<std::string> violated;
  const char* support;
};

inline bool matches_pattern(const ChernCharacter& ch, const PatternCase& pc) {
  for (const EntryIndex& z : pc.zeros) {
    if (ch(z.first, z.second) != 0) return false;
  }
  return true;
}

namespace detail {

inline std::vector<CaseResult> classify_with(const ChernCharacter& ch,
                                             const std::array<int, 6>& signs) {
  std::vector<CaseResult> out;
  for (const PatternCase& pc : pattern_cases()) {
    if (!matches_pattern(ch, pc)) continue;
    CaseResult r{pc.id, true, std::nullopt, pc.support};
    for (const EntryIndex& e : pc.nonnegative) {
      if (detail::entry_sign(signs, ch, e) < 0) {
        r.pass = false;
        r.violated = entry_name(e) + " >= 0";
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline bool passes_with(const ChernCharacter& ch, const std::array<int, 6>& signs) {
  for (const PatternCase& pc : pattern_cases()) {
    if (!matches_pattern(ch, pc)) continue;
    for (const EntryIndex& e : pc.nonnegative) {
      if (entry_sign(signs, ch, e) < 0) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Every case whose vanishing pattern ch matches, with its sign check.
inline std::vector<CaseResult> classify_pattern(const ChernCharacter& ch) {
  require_threefold(ch.geometry(), "classify_pattern");
  return detail::classify_with(ch, detail::pairing_signs(ch.geometry()));
}

/// True when every matched case passes.
inline bool passes_positivity(const ChernCharacter& ch) {
  require_threefold(ch.geometry(), "passes_positivity");
  return detail::passes_with(ch, detail::pairing_signs(ch.geometry()));
}

// -- Serre closure ------------------------------------------------------------

enum class SerrePattern { none, section, corner };

inline const char* to_string(SerrePattern p) {
  switch (p) {
    case SerrePattern::none: return "none";
    case SerrePattern::section: return "section";
    case SerrePattern::corner: return "corner";
  }
  return "?";
}

/// (0,0,0;*,*,*) is the section pattern, (0,0,*;*,*,*) the corner pattern.
inline SerrePattern serre_pattern(const ChernCharacter& ch) {
  if (ch(0, 0) != 0 || ch(0, 1) != 0) return SerrePattern::none;
  return ch(0, 2) == 0 ? SerrePattern::section : SerrePattern::corner;
}

struct SerreCertificate {
  bool closed = true;
  SerrePattern pattern = SerrePattern::none;
  /// One line per part: which pairings were forced to vanish.
  std::vector<std::string> forced_zero;
};

namespace detail {

// Fixed-width mirror of the part preconditions, for exhaustive scans.
inline bool torsion_part_signs_ok(std::int64_t a00, std::int64_t a01, std::int64_t a02,
                                  std::int64_t a10) {
  if (a00 < 0) return false;
  if (a00 == 0 && (a01 < 0 || a10 < 0)) return false;
  if (a00 == 0 && a01 == 0 && a02 < 0) return false;
  return true;
}

inline std::optional<std::string> part_precondition_violation(const ChernCharacter& part) {
  if (part.rank() < 0) return "rank < 0";
  if (part.rank() != 0) return std::nullopt;
  for (const CaseResult& r : classify_pattern(part)) {
    if ((r.case_id == 1 || r.case_id == 2) && !r.pass) {
      return "case " + std::to_string(r.case_id) + " requires " + *r.violated;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks that a decomposition of a section- or corner-pattern class into
/// sheaf-like parts keeps every part in the same pattern: the parts' c1.H.D
/// (and, for the section pattern, ch2.H) are nonnegative and sum to zero.
inline SerreCertificate serre_closure_check(const ChernCharacter& ch,
                                            const std::vector<ChernCharacter>& parts) {
  require_threefold(ch.geometry(), "serre_closure_check");
  ChernCharacter total(ch.geometry());
  for (const ChernCharacter& p : parts) total += p;
  if (!(total == ch)) {
    throw PreconditionError("parts sum to " + total.str() + ", not " + ch.str());
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (auto why = detail::part_precondition_violation(parts[k])) {
      throw PreconditionError("part " + std::to_string(k) + " " + parts[k].str() +
                              " is not a torsion-sheaf class: " + *why);
    }
  }

  SerreCertificate cert;
  cert.pattern = serre_pattern(ch);
  if (cert.pattern == SerrePattern::none) return cert;

  const Geometry& g = ch.geometry();
  const RationalClass H = divisor_H(g);
  const RationalClass D = divisor_D(g);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const ChernCharacter& p = parts[k];
    const Rational c1_hd = integrate(cup(p.c1(), H, D));
    const Rational ch2_h = integrate(cup(p.ch(2), H));
    std::string line = "part " + std::to_string(k) + ": rk = " + p.rank().str() +
                       ", c1.H.D = " + to_string(c1_hd);
    bool ok = p.rank() == 0 && c1_hd == 0;
    if (cert.pattern == SerrePattern::section) {
      line += ", ch2.H = " + to_string(ch2_h);
      ok = ok && ch2_h == 0;
    }
    cert.forced_zero.push_back(line);
    cert.closed = cert.closed && ok;
  }
  return cert;
}

// -- sub-character enumeration -----------------------------------------------

/// Lazily walks the integer box [-bound, bound]^6 in lexicographic order,
/// yielding the sub-characters ch' for which both ch' and ch - ch' pass the
/// positivity cases and 0 <= rk ch' <= rk ch.
class SubcharacterStream {
 public:
  SubcharacterStream(ChernCharacter ch, std::int64_t bound) : ch_(std::move(ch)), bound_(bound) {
    require_threefold(ch_.geometry(), "admissible_subcharacters");
    signs_ = detail::pairing_signs(ch_.geometry());
    if (bound < 0) throw PreconditionError("bound must be nonnegative");
    for (const Integer& a : ch_.entries()) {
      if (a > bound || a < -bound) {
        throw PreconditionError("bound " + std::to_string(bound) + " is smaller than an entry of " +
                                ch_.str());
      }
    }
    cursor_.fill(-bound);
  }

  std::optional<ChernCharacter> next() {
    while (!done_) {
      ChernCharacter candidate(ch_.geometry());
      for (int k = 0; k < 6; ++k) candidate.at(k / 3, k % 3) = cursor_[static_cast<std::size_t>(k)];
      advance();
      if (admissible(candidate)) return candidate;
    }
    return std::nullopt;
  }

 private:
  bool admissible(const ChernCharacter& sub) const {
    if (sub.rank() < 0 || sub.rank() > ch_.rank()) return false;
    return detail::passes_with(sub, signs_) && detail::passes_with(ch_ - sub, signs_);
  }

  void advance() {
    for (int k = 5; k >= 0; --k) {
      auto& c = cursor_[static_cast<std::size_t>(k)];
      if (c < bound_) {
        ++c;
        return;
      }
      c = -bound_;
    }
    done_ = true;
  }

  ChernCharacter ch_;
  std::int64_t bound_;
  std::array<int, 6> signs_{};
  std::array<std::int64_t, 6> cursor_{};
  bool done_ = false;
};

inline std::vector<ChernCharacter> admissible_subcharacters(const ChernCharacter& ch,
                                                            std::int64_t bound) {
  SubcharacterStream stream(ch, bound);
  std::vector<ChernCharacter> out;
  while (auto next = stream.next()) out.push_back(std::move(*next));
  return out;
}

}  // namespace fmstab
