/**
 * @file hn.hpp
 * @brief Harder-Narasimhan filtrations for a slope-like function, on finite
 *        subobject lattices.
 *
 * A SubobjectLattice stands in for the subobjects of a single object E of a
 * noetherian abelian category: a finite lattice with bottom 0 and top E, each
 * element labelled with its class (C0, C1). Subquotient classes are label
 * differences. The labels must be additive over meets and joins and satisfy
 * the slope-like positivity on every interval.
 */

#pragma once

#include "number.hpp"
#include "slope.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmstab {

struct KClass {
  Integer c0 = 0;
  Rational c1 = 0;

  KClass& operator+=(const KClass& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  KClass& operator-=(const KClass& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    return *this;
  }
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend bool operator==(const KClass&, const KClass&) = default;

  std::string str() const { return "(" + c0.str() + ", " + to_string(c1) + ")"; }
};

/// C1/C0, or +inf when C0 = 0.
inline SlopeValue slope(const KClass& c) { return SlopeValue::ratio(c.c1, Rational(c.c0)); }

/// Order of reduced polynomials p = P/alpha for m >> 0. With C0 != 0 this is
/// m + mu, so the order is the slope order; classes with C0 = 0 sit above
/// every class with C0 > 0 and tie with each other.
inline std::strong_ordering p_compare(const KClass& a, const KClass& b) { return slope(a) <=> slope(b); }

class SubobjectLattice {
 public:
  struct Element {
    std::string id;
    KClass label;
  };

  SubobjectLattice(std::vector<Element> elements,
                   const std::vector<std::pair<std::string, std::string>>& leq)
      : elements_(std::move(elements)) {
    const std::size_t n = elements_.size();
    if (n == 0) throw FixtureError("lattice has no elements");
    for (std::size_t i = 0; i < n; ++i) {
      if (!index_.emplace(elements_[i].id, static_cast<int>(i)).second) {
        throw FixtureError("duplicate element id '" + elements_[i].id + "'");
      }
    }
    leq_.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) leq_[i][i] = 1;
    for (const auto& [a, b] : leq) leq_[idx(a)][idx(b)] = 1;
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (leq_[k][j]) leq_[i][j] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (leq_[i][j] && leq_[j][i]) {
          throw FixtureError("order is not antisymmetric: '" + elements_[i].id + "' and '" +
                             elements_[j].id + "'");
        }
      }
    }
    meet_.assign(n, std::vector<int>(n, -1));
    join_.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < size(); ++a) {
      for (int b = 0; b < size(); ++b) {
        meet_[ua(a)][ua(b)] = extremal_bound(a, b, false);
        join_[ua(a)][ua(b)] = extremal_bound(a, b, true);
      }
    }
    bottom_ = extremal_element(false);
    top_ = extremal_element(true);
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const Element& element(int i) const { return elements_.at(ua(i)); }
  const std::string& id(int i) const { return element(i).id; }
  const KClass& label(int i) const { return element(i).label; }

  int index_of(const std::string& id) const { return idx(id); }

  bool leq(int a, int b) const { return leq_[ua(a)][ua(b)] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  /// -1 when the pair has no meet (resp. join); validate_lattice reports it.
  int meet(int a, int b) const { return meet_[ua(a)][ua(b)]; }
  int join(int a, int b) const { return join_[ua(a)][ua(b)]; }

  /// -1 when there is no unique least (greatest) element.
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Class of the subquotient b/a for a <= b.
  KClass quotient(int a, int b) const { return label(b) - label(a); }

 private:
  static std::size_t ua(int i) { return static_cast<std::size_t>(i); }

  int idx(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw FixtureError("unknown element id '" + id + "'");
    return it->second;
  }

  // Greatest lower bound (upper=false) or least upper bound (upper=true).
  int extremal_bound(int a, int b, bool upper) const {
    std::vector<int> bounds;
    for (int x = 0; x < size(); ++x) {
      const bool ok = upper ? (leq(a, x) && leq(b, x)) : (leq(x, a) && leq(x, b));
      if (ok) bounds.push_back(x);
    }
    for (int x : bounds) {
      bool extremal = true;
      for (int y : bounds) {
        if (upper ? !leq(x, y) : !leq(y, x)) {
          extremal = false;
          break;
        }
      }
      if (extremal) return x;
    }
    return -1;
  }

  int extremal_element(bool greatest) const {
    for (int x = 0; x < size(); ++x) {
      bool ok = true;
      for (int y = 0; y < size() && ok; ++y) ok = greatest ? leq(y, x) : leq(x, y);
      if (ok) return x;
    }
    return -1;
  }

  std::vector<Element> elements_;
  std::map<std::string, int> index_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<int>> meet_;
  std::vector<std::vector<int>> join_;
  int bottom_ = -1;
  int top_ = -1;
};

struct LatticeReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks the lattice axioms, label additivity over every pair and the
/// slope-like positivity of every interval. All checks are exhaustive.
inline LatticeReport validate_lattice(const SubobjectLattice& L) {
  LatticeReport r;
  auto fail = [&r](std::string what) {
    r.ok = false;
    r.violations.push_back(std::move(what));
  };
  if (L.bottom() < 0) fail("no bottom element");
  if (L.top() < 0) fail("no top element");
  if (L.bottom() >= 0 && !(L.label(L.bottom()) == KClass{})) {
    fail("bottom '" + L.id(L.bottom()) + "' has label " + L.label(L.bottom()).str());
  }
  for (int a = 0; a < L.size(); ++a) {
    for (int b = a + 1; b < L.size(); ++b) {
      const int m = L.meet(a, b);
      const int j = L.join(a, b);
      const std::string pair = "('" + L.id(a) + "', '" + L.id(b) + "')";
      if (m < 0) fail("no meet for " + pair);
      if (j < 0) fail("no join for " + pair);
      if (m < 0 || j < 0) continue;
      if (!(L.label(j) + L.label(m) == L.label(a) + L.label(b))) {
        fail("labels not additive on " + pair + ": join + meet = " +
             (L.label(j) + L.label(m)).str() + ", sum = " + (L.label(a) + L.label(b)).str());
      }
    }
  }
  for (int a = 0; a < L.size(); ++a) {
    for (int b = 0; b < L.size(); ++b) {
      if (!L.less(a, b)) continue;
      const KClass q = L.quotient(a, b);
      const std::string interval = "['" + L.id(a) + "', '" + L.id(b) + "']";
      if (q.c0 < 0) fail("C0 not monotone on " + interval);
      if (q.c0 == 0 && q.c1 < 0) fail("C1 negative on C0-flat interval " + interval);
    }
  }
  return r;
}

namespace detail {

inline void require_valid(const SubobjectLattice& L) {
  const LatticeReport r = validate_lattice(L);
  if (!r.ok) throw FixtureError("invalid lattice: " + r.violations.front());
}

// Largest element x >= floor whose subquotient x/floor satisfies pred, checked
// to dominate every other such element.
template <class Pred>
int maximal_with(const SubobjectLattice& L, int floor, Pred pred, const char* what) {
  int best = floor;
  for (int x = 0; x < L.size(); ++x) {
    if (L.leq(floor, x) && pred(L.quotient(floor, x))) best = L.join(best, x);
  }
  if (!pred(L.quotient(floor, best))) {
    throw FixtureError(std::string(what) + " is not closed under joins at '" + L.id(best) + "'");
  }
  return best;
}

}  // namespace detail

/// Maximal subobject in B0 (C0 = 0).
inline int torsion_part(const SubobjectLattice& L) {
  detail::require_valid(L);
  return detail::maximal_with(L, L.bottom(), [](const KClass& c) { return c.c0 == 0; }, "B0");
}

/// Maximal subobject in B01 (C0 = C1 = 0).
inline int b01_part(const SubobjectLattice& L) {
  detail::require_valid(L);
  return detail::maximal_with(
      L, L.bottom(), [](const KClass& c) { return c.c0 == 0 && c.c1 == 0; }, "B01");
}

/// The maximal destabilising subobject of top/floor: the element F > floor
/// whose subquotient F/floor has the largest slope and contains every other
/// element of that slope. Found as the join of all slope-maximal elements,
/// then checked to be slope-maximal itself.
inline int maximal_destabilizer(const SubobjectLattice& L, int floor) {
  detail::require_valid(L);
  std::optional<SlopeValue> best;
  for (int x = 0; x < L.size(); ++x) {
    if (!L.less(floor, x)) continue;
    const KClass q = L.quotient(floor, x);
    if (q.c0 == 0) {
      throw FixtureError("'" + L.id(x) + "' / '" + L.id(floor) +
                         "' has C0 = 0 above the torsion part");
    }
    const SlopeValue mu = slope(q);
    if (!best || mu > *best) best = mu;
  }
  if (!best) throw PreconditionError("floor '" + L.id(floor) + "' is already the top");
  int f = floor;
  for (int x = 0; x < L.size(); ++x) {
    if (L.less(floor, x) && slope(L.quotient(floor, x)) == *best) f = L.join(f, x);
  }
  if (!(slope(L.quotient(floor, f)) == *best)) {
    throw FixtureError("join '" + L.id(f) + "' of the slope-maximal elements above '" +
                       L.id(floor) + "' is not slope-maximal");
  }
  return f;
}

struct HNFiltration {
  int e01 = -1;
  int e0 = -1;
  /// E_1, ..., E_m (E_m is the top). Empty when the top lies in B0.
  std::vector<int> steps;
  std::vector<KClass> factors;
  std::vector<SlopeValue> slopes;

  /// [E01, E0, E1, ..., Em].
  std::vector<int> chain() const {
    std::vector<int> out{e01, e0};
    out.insert(out.end(), steps.begin(), steps.end());
    return out;
  }

  friend bool operator==(const HNFiltration& a, const HNFiltration& b) {
    return a.chain() == b.chain();
  }
};

namespace detail {

inline HNFiltration assemble(const SubobjectLattice& L, int e01, int e0, std::vector<int> steps) {
  HNFiltration h;
  h.e01 = e01;
  h.e0 = e0;
  h.steps = std::move(steps);
  int prev = e0;
  for (int s : h.steps) {
    h.factors.push_back(L.quotient(prev, s));
    h.slopes.push_back(slope(h.factors.back()));
    prev = s;
  }
  return h;
}

// True when every x in (lo, hi] has x/lo in (B0)^o and slope(x/lo) <= slope(hi/lo).
inline bool semistable_factor(const SubobjectLattice& L, int lo, int hi) {
  const SlopeValue mu = slope(L.quotient(lo, hi));
  for (int x = 0; x < L.size(); ++x) {
    if (!L.less(lo, x) || !L.leq(x, hi)) continue;
    const KClass q = L.quotient(lo, x);
    if (q.c0 <= 0) return false;
    if (slope(q) > mu) return false;
  }
  return true;
}

}  // namespace detail

/// E01 = b01_part, E0 = torsion_part, then repeated maximal destabilisers.
/// The result is checked: factors semistable with strictly falling slopes.
inline HNFiltration hn_filtration(const SubobjectLattice& L) {
  const int e01 = b01_part(L);
  const int e0 = torsion_part(L);
  std::vector<int> steps;
  int floor = e0;
  while (floor != L.top()) {
    floor = maximal_destabilizer(L, floor);
    steps.push_back(floor);
  }
  HNFiltration h = detail::assemble(L, e01, e0, std::move(steps));
  int prev = e0;
  for (std::size_t i = 0; i < h.steps.size(); ++i) {
    if (!detail::semistable_factor(L, prev, h.steps[i])) {
      throw FixtureError("factor ending at '" + L.id(h.steps[i]) + "' is not semistable");
    }
    if (i > 0 && !(h.slopes[i] < h.slopes[i - 1])) {
      throw FixtureError("factor slopes do not strictly decrease at '" + L.id(h.steps[i]) + "'");
    }
    prev = h.steps[i];
  }
  return h;
}

/// Slope of the first (last) factor with C0 > 0; empty when the top lies in B0.
inline std::optional<SlopeValue> mu_max(const SubobjectLattice& L) {
  const HNFiltration h = hn_filtration(L);
  if (h.slopes.empty()) return std::nullopt;
  return h.slopes.front();
}

inline std::optional<SlopeValue> mu_min(const SubobjectLattice& L) {
  const HNFiltration h = hn_filtration(L);
  if (h.slopes.empty()) return std::nullopt;
  return h.slopes.back();
}

/// Independent oracle: enumerates every chain E01 <= E0 < E1 < ... < Em = top
/// and keeps those meeting the defining conditions of an HN filtration
/// directly (E01 in B01; E0/E01 in B0 with no nonzero subobject in B01; each
/// later factor in (B0)^o, semistable, slopes strictly decreasing). Throws
/// unless exactly one chain qualifies.
inline HNFiltration hn_by_exhaustion(const SubobjectLattice& L) {
  detail::require_valid(L);
  const int bottom = L.bottom();
  const int top = L.top();
  std::vector<HNFiltration> found;

  auto in_b01 = [](const KClass& c) { return c.c0 == 0 && c.c1 == 0; };

  std::vector<int> steps;
  // Depth-first over E1 < E2 < ... ending at top.
  auto extend = [&](auto&& self, int e01, int e0, int prev,
                    std::optional<SlopeValue> prev_slope) -> void {
    if (prev == top) {
      found.push_back(detail::assemble(L, e01, e0, steps));
      return;
    }
    for (int x = 0; x < L.size(); ++x) {
      if (!L.less(prev, x)) continue;
      if (!detail::semistable_factor(L, prev, x)) continue;
      const SlopeValue mu = slope(L.quotient(prev, x));
      if (prev_slope && !(mu < *prev_slope)) continue;
      steps.push_back(x);
      self(self, e01, e0, x, mu);
      steps.pop_back();
    }
  };

  for (int e01 = 0; e01 < L.size(); ++e01) {
    if (!in_b01(L.quotient(bottom, e01))) continue;
    for (int e0 = 0; e0 < L.size(); ++e0) {
      if (!L.leq(e01, e0) || L.quotient(e01, e0).c0 != 0) continue;
      bool b01_free = true;
      for (int x = 0; x < L.size() && b01_free; ++x) {
        if (L.less(e01, x) && L.leq(x, e0) && in_b01(L.quotient(e01, x))) b01_free = false;
      }
      if (!b01_free) continue;
      extend(extend, e01, e0, e0, std::nullopt);
    }
  }

  if (found.size() != 1) {
    throw FixtureError("expected exactly one HN filtration by exhaustion, found " +
                       std::to_string(found.size()));
  }
  return found.front();
}

}  // namespace fmstab
