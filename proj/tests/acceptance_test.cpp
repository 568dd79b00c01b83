// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "ring_oracle.hpp"
#include "test_support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace fmstab;
using fmstab::testing::RingModel;
using fmstab::testing::Sampler;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) notes << " first failure: " << what << ";";
    pass = pass && ok;
  }
};

int run(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ["
            << secs << "s]" << out.notes.str() << std::endl;
  return out.pass ? 0 : 1;
}

// 1. Basis images and the involution on [-3,3]^6.
void criterion1(Outcome& out) {
  const Geometry g = Geometry::threefold(1);
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 2; ++j) {
      ChernCharacter e(g);
      e.at(i, j) = 1;
      ChernCharacter expected(g);
      expected.at(1 - i, j) = (i + 1) % 2 == 0 ? 1 : -1;  // (-1)^(i+1)
      out.check(fm_transform(e) == expected, "basis image e" + std::to_string(i) + "f" + std::to_string(j));
    }
  }
  const Report r = verify_involution(3, g);
  out.check(r.cases == 117649, "involution case count " + std::to_string(r.cases));
  out.check(r.ok(), r.counterexamples.empty() ? "involution" : r.counterexamples.front());
  out.notes << " cases=" << r.cases << " failures=" << r.failures << ";";
}

// 2. Every product of basis classes against the truncated polynomial model.
void criterion2(Outcome& out) {
  int products = 0;
  for (int d = 1; d <= 5; ++d) {
    const Geometry g = Geometry::threefold(d);
    const RingModel model{g};
    for (int i1 = 0; i1 <= 1; ++i1)
      for (int j1 = 0; j1 <= 2; ++j1)
        for (int i2 = 0; i2 <= 1; ++i2)
          for (int j2 = 0; j2 <= 2; ++j2) {
            const RationalClass a = basis_class(g, i1, j1);
            const RationalClass b = basis_class(g, i2, j2);
            ++products;
            out.check(cup(a, b) == model.cup(a, b), "d=" + std::to_string(d) + " product");
          }
    const RationalClass D = divisor_D(g);
    const RationalClass H = divisor_H(g);
    out.check(integrate(cup(D, D, H)) == 2 * d, "D^2 H = 2d");
    out.check(cup(H, H).is_zero(), "H^2 = 0");
    out.check(integrate(cup(D, basis_class(g, 1, 1))) == 2 * d, "D . e1f1 = 2d");
    out.check(integrate(cup(H, basis_class(g, 0, 2))) == 1, "H . e0f2 = 1");
    out.check(cup(D, D, D).is_zero(), "D^3 = 0");
  }
  out.notes << " products=" << products << ";";
}

// 3. mu_H against the integrate oracle, closed transform slope against mu_H o fm.
void criterion3(Outcome& out) {
  Sampler s(20240301);
  for (int k = 0; k < 10000; ++k) {
    const Geometry g = Geometry::threefold(s.uniform(1, 5));
    const ChernCharacter v = s.character(g, 9);
    const DivisorClass w{s.positive_rational(7), s.positive_rational(7)};
    const RationalClass wc = w.as_class(g);
    const SlopeValue oracle = SlopeValue::ratio(integrate(cup(v.c1(), wc, wc)), Rational(v.rank()));
    out.check(mu_H(v, w) == oracle, "mu_H " + v.str());
    out.check(mu_H_of_transform(v, w) == mu_H(fm_transform(v), w), "closed form " + v.str());
  }
  out.notes << " samples=10000;";
}

// 4. Named Euler characteristics and P(0) = chi.
void criterion4(Outcome& out) {
  for (int d = 1; d <= 5; ++d) {
    const Geometry g = Geometry::threefold(d);
    out.check(euler_characteristic(ChernCharacter(g, {0, 0, 0, 0, 0, 1})) == 1, "chi(point)");
    out.check(euler_characteristic(ChernCharacter(g, {0, 0, 0, 1, 0, 0})) == 2, "chi(section)");
    out.check(euler_characteristic(ChernCharacter(g, {1, 0, 0, 0, 0, 0})) == 0, "chi(O_X)");
  }
  Sampler s(20240302);
  for (int k = 0; k < 10000; ++k) {
    const Geometry g = (k % 4 == 0) ? Geometry::surface(s.uniform(0, 3)) : Geometry::threefold(s.uniform(1, 5));
    const ChernCharacter v = s.character(g, 9);
    const DivisorClass w{s.positive_rational(7), s.positive_rational(7)};
    out.check(hilbert_polynomial(v, w).evaluate(Rational(0)) == euler_characteristic(v), "P(0) " + v.str());
  }
  out.notes << " samples=10000;";
}

// 5. Staged verdicts against evaluation at N0 and N0 + 7.
void criterion5(Outcome& out) {
  Sampler s(20240303);
  int two_dim = 0;
  int surface = 0;
  int decided = 0;
  while (two_dim < 1000) {
    const Geometry g = Geometry::threefold(s.uniform(1, 3));
    ChernCharacter sub = s.character(g, 4);
    ChernCharacter e = s.character(g, 4);
    sub.at(0, 0) = 0;
    e.at(0, 0) = 0;
    if (two_dim % 3 == 1) {
      e = sub;
      e.at(1, 2) += s.uniform(-2, 2);
    }
    if ((sub(0, 1) == 0 && sub(1, 0) == 0) || (e(0, 1) == 0 && e(1, 0) == 0)) continue;
    ++two_dim;
    const Verdict v = destabilizes_2d(sub, e);
    if (v.kind != VerdictKind::neutral) ++decided;
    out.check(verdict_matches_evaluation(sub, e, v), "2d " + sub.str() + " vs " + e.str());
  }
  while (surface < 1000) {
    const Geometry g = Geometry::surface(s.uniform(0, 3));
    ChernCharacter sub = s.character(g, 4);
    ChernCharacter e = s.character(g, 4);
    SurfaceCase c = SurfaceCase::torsion_free;
    if (surface % 2) {
      c = SurfaceCase::one_dimensional;
      sub.at(0, 0) = 0;
      e.at(0, 0) = 0;
      if (e(1, 0) == 0 || (sub(1, 0) == 0 && sub(0, 1) == 0)) continue;
    } else if (sub.rank() == 0 || e.rank() == 0) {
      continue;
    }
    if (surface % 5 == 0) e.at(1, 1) = sub(1, 1);
    ++surface;
    const Verdict v = surface_compare(sub, e, c);
    if (v.kind != VerdictKind::neutral) ++decided;
    out.check(verdict_matches_evaluation(sub, e, v), "surface " + sub.str() + " vs " + e.str());
  }
  out.notes << " 2d_pairs=" << two_dim << " surface_pairs=" << surface << " decided=" << decided << ";";
}

// 6. HN corpus: greedy equals exhaustion, strictly falling slopes, invariance
// under positive rescaling of the labels.
void criterion6(Outcome& out) {
  const auto paths = fmstab::testing::hn_fixtures();
  out.check(paths.size() >= 20, "corpus has " + std::to_string(paths.size()) + " fixtures");
  for (const auto& path : paths) {
    const std::string name = path.filename().string();
    const SubobjectLattice L = lattice_from_json(fmstab::testing::load_json(path));
    const HNFiltration h = hn_filtration(L);
    const HNFiltration oracle = hn_by_exhaustion(L);  // throws unless unique
    out.check(h == oracle && h.slopes == oracle.slopes, name + " greedy != exhaustion");
    for (std::size_t i = 1; i < h.slopes.size(); ++i) out.check(h.slopes[i] < h.slopes[i - 1], name + " slopes");

    std::vector<SubobjectLattice::Element> scaled;
    std::vector<std::pair<std::string, std::string>> leq;
    for (int a = 0; a < L.size(); ++a) {
      scaled.push_back({L.id(a), KClass{L.label(a).c0 * 6, L.label(a).c1 * 6}});
      for (int b = 0; b < L.size(); ++b) {
        if (L.less(a, b)) leq.emplace_back(L.id(a), L.id(b));
      }
    }
    const SubobjectLattice M(scaled, leq);
    std::vector<std::string> ids_l;
    std::vector<std::string> ids_m;
    for (int x : h.chain()) ids_l.push_back(L.id(x));
    for (int x : hn_filtration(M).chain()) ids_m.push_back(M.id(x));
    out.check(ids_l == ids_m, name + " not scaling invariant");
  }
  out.notes << " fixtures=" << paths.size() << ";";
}

// Positivity table written directly on entries (every detecting pairing is a
// positive multiple of its entry).
bool table_passes(const std::array<std::int64_t, 6>& a) {
  const auto a00 = a[0], a01 = a[1], a02 = a[2], a10 = a[3], a11 = a[4], a12 = a[5];
  if (a00 != 0) return true;
  if (a01 < 0 || a10 < 0) return false;
  if (a01 == 0 && a02 < 0) return false;
  if (a01 == 0 && a10 == 0 && a11 < 0) return false;
  if (a01 == 0 && a02 == 0 && a10 == 0 && a11 == 0 && a12 < 0) return false;
  return true;
}

// 7. Serre closure over every two-part split inside [-3,3]^6 of every section
// and corner class with entries in [0,3]; enumerator equals the filtered box.
void criterion7(Outcome& out) {
  const Geometry g = Geometry::threefold(1);
  std::int64_t classes = 0;
  std::int64_t splits = 0;
  std::vector<std::array<std::int64_t, 6>> targets;
  for (std::int64_t a02 = 0; a02 <= 3; ++a02)
    for (std::int64_t a10 = 0; a10 <= 3; ++a10)
      for (std::int64_t a11 = 0; a11 <= 3; ++a11)
        for (std::int64_t a12 = 0; a12 <= 3; ++a12) targets.push_back({0, 0, a02, a10, a11, a12});
  for (const auto& t : targets) {
    ++classes;
    const ChernCharacter ch(g, {t[0], t[1], t[2], t[3], t[4], t[5]});
    std::array<std::int64_t, 6> p{};
    for (p[0] = -3; p[0] <= 3; ++p[0])
      for (p[1] = -3; p[1] <= 3; ++p[1])
        for (p[2] = -3; p[2] <= 3; ++p[2])
          for (p[3] = -3; p[3] <= 3; ++p[3]) {
            if (!detail::torsion_part_signs_ok(p[0], p[1], p[2], p[3])) continue;
            if (!detail::torsion_part_signs_ok(t[0] - p[0], t[1] - p[1], t[2] - p[2], t[3] - p[3])) continue;
            for (p[4] = -3; p[4] <= 3; ++p[4])
              for (p[5] = -3; p[5] <= 3; ++p[5]) {
                const ChernCharacter part(g, {p[0], p[1], p[2], p[3], p[4], p[5]});
                ++splits;
                const SerreCertificate cert = serre_closure_check(ch, {part, ch - part});
                out.check(cert.closed, ch.str() + " = " + part.str() + " + rest");
              }
          }
  }
  out.notes << " classes=" << classes << " splits=" << splits << ";";

  std::int64_t compared = 0;
  for (const auto& t : std::vector<std::array<std::int64_t, 6>>{
           {0, 0, 0, 1, 0, 2}, {0, 0, 0, 2, 1, 0}, {0, 0, 1, 1, 1, 1}, {1, 0, 0, 1, 1, 0}, {2, 1, -1, 0, 3, 2}}) {
    const ChernCharacter ch(g, {t[0], t[1], t[2], t[3], t[4], t[5]});
    std::vector<std::string> expected;
    std::array<std::int64_t, 6> p{};
    for (p[0] = -3; p[0] <= 3; ++p[0])
      for (p[1] = -3; p[1] <= 3; ++p[1])
        for (p[2] = -3; p[2] <= 3; ++p[2])
          for (p[3] = -3; p[3] <= 3; ++p[3])
            for (p[4] = -3; p[4] <= 3; ++p[4])
              for (p[5] = -3; p[5] <= 3; ++p[5]) {
                std::array<std::int64_t, 6> q{};
                for (int k = 0; k < 6; ++k) q[k] = t[k] - p[k];
                if (p[0] < 0 || p[0] > t[0]) continue;
                if (table_passes(p) && table_passes(q)) {
                  expected.push_back(ChernCharacter(g, {p[0], p[1], p[2], p[3], p[4], p[5]}).str());
                }
              }
    std::vector<std::string> got;
    for (const ChernCharacter& c : admissible_subcharacters(ch, 3)) got.push_back(c.str());
    compared += static_cast<std::int64_t>(expected.size());
    out.check(got == expected, "admissible_subcharacters " + ch.str());
  }
  out.notes << " admissible_compared=" << compared << ";";
}

// 8. Correspondence suites and the main verifier.
void criterion8(Outcome& out) {
  auto require_ok = [&out](const Report& r, const std::string& label) {
    out.check(r.ok(), label + (r.counterexamples.empty() ? "" : ": " + r.counterexamples.front()));
    out.notes << " " << label << "=" << r.cases << "/" << r.failures << ";";
  };
  for (int d : {1, 2}) {
    require_ok(verify_slope_correspondence(3, d), "slopes_d" + std::to_string(d));
    require_ok(verify_chi_correspondence(3, d), "chi_d" + std::to_string(d));
  }
  const Geometry g = Geometry::threefold(1);
  for (const ChernCharacter& ch : {ChernCharacter(g, {0, 0, 0, 1, 0, 2}), ChernCharacter(g, {0, 0, 0, 2, 1, 0}),
                                   ChernCharacter(g, {0, 0, 0, 1, 1, 1})}) {
    require_ok(verify_theorem1_box(ch, 3), "theorem1" + ch.str());
  }
  const Report g1 = verify_surface_identities(3, 1);
  require_ok(g1, "surface_g1");
  out.check(g1.counters.count("flagged") == 0, "g = 1 flagged a discrepancy");
  const Report g0 = verify_surface_identities(3, 0);
  require_ok(g0, "surface_g0");
  // Exactly the classes with a00 != 0: 6 * 7^3.
  out.check(g0.counters.count("flagged") && g0.counters.at("flagged") == 6 * 343, "g = 0 flagged count");
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "transform basis table and involution on [-3,3]^6", criterion1);
  failures += run(2, "intersection table for d = 1..5", criterion2);
  failures += run(3, "slope formulas on 10^4 samples", criterion3);
  failures += run(4, "Euler characteristics and P(0) = chi", criterion4);
  failures += run(5, "Gieseker comparators against evaluation at N0, N0 + 7", criterion5);
  failures += run(6, "HN engine on the fixture corpus", criterion6);
  failures += run(7, "Serre closure and admissible sub-characters", criterion7);
  failures += run(8, "correspondence suites and main verifier", criterion8);
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
