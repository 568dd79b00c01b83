#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace fmstab;
using fmstab::testing::Sampler;

namespace {

using Entries = std::array<std::int64_t, 6>;

// The sign table written out directly on matrix entries. Every detecting
// pairing is a positive multiple of its entry, so signs transfer unchanged.
bool brute_passes(const Entries& a) {
  const auto a00 = a[0], a01 = a[1], a02 = a[2], a10 = a[3], a11 = a[4], a12 = a[5];
  if (a00 == 0 && (a01 < 0 || a10 < 0)) return false;
  if (a00 == 0 && a01 == 0 && (a02 < 0 || a10 < 0)) return false;
  if (a00 == 0 && a01 == 0 && a02 == 0 && a10 < 0) return false;
  if (a00 == 0 && a10 == 0 && a01 < 0) return false;
  if (a00 == 0 && a01 == 0 && a10 == 0 && (a02 < 0 || a11 < 0)) return false;
  if (a00 == 0 && a01 == 0 && a10 == 0 && a11 == 0 && a02 < 0) return false;
  if (a00 == 0 && a01 == 0 && a02 == 0 && a10 == 0 && a11 == 0 && a12 < 0) return false;
  return true;
}

ChernCharacter from_entries(const Geometry& g, const Entries& a) {
  return ChernCharacter(g, {a[0], a[1], a[2], a[3], a[4], a[5]});
}

template <class Fn>
void for_box(std::int64_t lo, std::int64_t hi, Fn fn) {
  Entries a{};
  for (a[0] = lo; a[0] <= hi; ++a[0])
    for (a[1] = lo; a[1] <= hi; ++a[1])
      for (a[2] = lo; a[2] <= hi; ++a[2])
        for (a[3] = lo; a[3] <= hi; ++a[3])
          for (a[4] = lo; a[4] <= hi; ++a[4])
            for (a[5] = lo; a[5] <= hi; ++a[5]) fn(a);
}

}  // namespace

TEST(Classify, Examples) {
  const Geometry g = Geometry::threefold(1);
  const auto neg = classify_pattern(ChernCharacter(g, {0, 0, 0, -1, 0, 0}));
  bool saw3 = false;
  for (const CaseResult& r : neg) {
    if (r.case_id == 3) {
      saw3 = true;
      EXPECT_FALSE(r.pass);
      EXPECT_EQ(*r.violated, "a10 >= 0");
    }
  }
  EXPECT_TRUE(saw3);

  const auto points = classify_pattern(ChernCharacter(g, {0, 0, 0, 0, 0, 5}));
  ASSERT_FALSE(points.empty());
  EXPECT_EQ(points.back().case_id, 8);
  EXPECT_TRUE(points.back().pass);
  EXPECT_STREQ(points.back().support, "supported at finitely many points");

  const auto zero = classify_pattern(ChernCharacter(g));
  EXPECT_EQ(zero.size(), 8u);
  for (const CaseResult& r : zero) EXPECT_TRUE(r.pass);
  EXPECT_TRUE(classify_pattern(ChernCharacter(g, {1, -5, -5, -5, -5, -5})).empty());
  EXPECT_THROW(classify_pattern(ChernCharacter(Geometry::surface(1))), PreconditionError);
}

TEST(Classify, AgreesWithEntryTable) {
  for (int d : {1, 3}) {
    const Geometry g = Geometry::threefold(d);
    for_box(-1, 1, [&](const Entries& a) {
      EXPECT_EQ(passes_positivity(from_entries(g, a)), brute_passes(a)) << from_entries(g, a).str();
    });
  }
}

TEST(Serre, Examples) {
  const Geometry g = Geometry::threefold(1);
  const ChernCharacter ch(g, {0, 0, 0, 1, 1, 0});
  const SerreCertificate cert =
      serre_closure_check(ch, {ChernCharacter(g, {0, 0, 0, 1, 0, 0}), ChernCharacter(g, {0, 0, 0, 0, 1, 0})});
  EXPECT_TRUE(cert.closed);
  EXPECT_EQ(cert.pattern, SerrePattern::section);
  EXPECT_EQ(cert.forced_zero.size(), 2u);

  EXPECT_THROW(serre_closure_check(ChernCharacter(g, {0, 0, 0, 1, 0, 0}),
                                   {ChernCharacter(g, {0, 1, 0, 1, 0, 0}), ChernCharacter(g, {0, -1, 0, 0, 0, 0})}),
               PreconditionError);
  EXPECT_TRUE(serre_closure_check(ch, {ch, ChernCharacter(g)}).closed);
  EXPECT_THROW(serre_closure_check(ch, {ChernCharacter(g)}), PreconditionError);
  EXPECT_EQ(serre_pattern(ChernCharacter(g, {0, 0, 4, 1, 0, 0})), SerrePattern::corner);
  EXPECT_EQ(serre_pattern(ChernCharacter(g, {0, 1, 4, 1, 0, 0})), SerrePattern::none);
}

// Every two-part decomposition of a small section or corner class whose parts
// pass the part preconditions stays in the pattern.
TEST(Serre, TwoPartDecompositionsClose) {
  const Geometry g = Geometry::threefold(2);
  int checked = 0;
  for (const ChernCharacter& ch : {ChernCharacter(g, {0, 0, 0, 2, 1, 1}), ChernCharacter(g, {0, 0, 2, 1, 1, 0})}) {
    for_box(-2, 2, [&](const Entries& a) {
      const ChernCharacter p = from_entries(g, a);
      const ChernCharacter q = ch - p;
      if (detail::part_precondition_violation(p) || detail::part_precondition_violation(q)) return;
      ++checked;
      EXPECT_TRUE(serre_closure_check(ch, {p, q}).closed) << p.str() << " + " << q.str();
    });
  }
  EXPECT_GT(checked, 0);
}

TEST(Enumerate, Examples) {
  const Geometry g = Geometry::threefold(1);
  const auto zero = admissible_subcharacters(ChernCharacter(g), 1);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero.front().is_zero());

  const ChernCharacter section(g, {0, 0, 0, 1, 0, 0});
  const auto subs = admissible_subcharacters(section, 1);
  for (const ChernCharacter& s : subs) {
    for (const CaseResult& r : classify_pattern(s)) EXPECT_TRUE(r.pass);
    for (const CaseResult& r : classify_pattern(section - s)) EXPECT_TRUE(r.pass);
  }
  const std::set<std::string> names = [&] {
    std::set<std::string> out;
    for (const auto& s : subs) out.insert(s.str());
    return out;
  }();
  EXPECT_TRUE(names.count("(0,0,0;0,0,0)"));
  EXPECT_TRUE(names.count("(0,0,0;1,0,0)"));
  EXPECT_TRUE(names.count("(0,0,0;0,0,1)"));
  EXPECT_FALSE(names.count("(0,0,0;-1,0,0)"));
  EXPECT_THROW(admissible_subcharacters(ChernCharacter(g, {0, 0, 0, 3, 0, 0}), 2), PreconditionError);
  EXPECT_THROW(admissible_subcharacters(ChernCharacter(Geometry::surface(1)), 1), PreconditionError);
}

TEST(Enumerate, EqualsBruteForceFilter) {
  const Geometry g = Geometry::threefold(1);
  for (const Entries& ch_entries : {Entries{0, 0, 0, 1, 0, 2}, Entries{1, 0, 0, 1, 1, 0}, Entries{2, 1, 0, 0, 0, 1}}) {
    const ChernCharacter ch = from_entries(g, ch_entries);
    std::vector<std::string> expected;
    for_box(-2, 2, [&](const Entries& a) {
      Entries rest{};
      for (int k = 0; k < 6; ++k) rest[k] = ch_entries[k] - a[k];
      if (a[0] < 0 || a[0] > ch_entries[0]) return;
      if (brute_passes(a) && brute_passes(rest)) expected.push_back(from_entries(g, a).str());
    });
    std::vector<std::string> got;
    for (const ChernCharacter& s : admissible_subcharacters(ch, 2)) got.push_back(s.str());
    EXPECT_EQ(got, expected) << ch.str();
  }
}
