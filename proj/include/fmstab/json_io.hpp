/**
 * @file json_io.hpp
 * @brief JSON encodings for characters, rationals, lattices and reports.
 *
 * Rationals are written as bare integers when integral and as "p/q" strings
 * otherwise; both forms are accepted on input.
 */

#pragma once

#include "cohomology.hpp"
#include "gieseker.hpp"
#include "hn.hpp"
#include "positivity.hpp"
#include "slope.hpp"
#include "verifier.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace fmstab {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& x) {
  if (is_integral(x)) {
    const Integer n = numerator_of(x);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
      return Json(static_cast<std::int64_t>(n));
    }
  }
  return Json(to_string(x));
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

inline Json integer_to_json(const Integer& x) { return rational_to_json(Rational(x)); }

inline Json slope_to_json(const SlopeValue& s) {
  return s.is_infinite() ? Json("+inf") : rational_to_json(s.value());
}

inline Json geometry_to_json(const Geometry& g) {
  if (g.is_threefold()) return Json{{"kind", "threefold"}, {"d", g.d()}};
  return Json{{"kind", "surface"}, {"g", g.genus()}};
}

inline Geometry geometry_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("geometry needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "threefold") return Geometry::threefold(j.value("d", std::int64_t{1}));
  if (kind == "surface") return Geometry::surface(j.value("g", std::int64_t{1}));
  throw ParseError("unknown geometry kind '" + kind + "'");
}

inline Json chern_to_json(const ChernCharacter& ch) {
  Json matrix = Json::array();
  for (int i = 0; i <= 1; ++i) {
    Json row = Json::array();
    for (int j = 0; j < ch.cols(); ++j) row.push_back(integer_to_json(ch(i, j)));
    matrix.push_back(row);
  }
  return Json{{"geometry", geometry_to_json(ch.geometry())}, {"matrix", matrix}};
}

/// When the document has no "geometry" key, `fallback` is used.
inline ChernCharacter chern_from_json(const Json& j, const Geometry& fallback) {
  try {
    const Geometry g = j.contains("geometry") ? geometry_from_json(j.at("geometry")) : fallback;
    const Json& m = j.at("matrix");
    if (!m.is_array() || m.size() != 2) throw ParseError("matrix must have two rows");
    std::vector<Integer> entries;
    for (const Json& row : m) {
      if (!row.is_array() || static_cast<int>(row.size()) != g.base_rank()) {
        throw ParseError("each matrix row needs " + std::to_string(g.base_rank()) + " entries for " +
                         g.describe());
      }
      for (const Json& x : row) entries.push_back(integer_from_json(x));
    }
    return ChernCharacter(g, entries);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed Chern character: ") + e.what());
  }
}

inline ChernCharacter chern_from_json(const Json& j) {
  return chern_from_json(j, Geometry::threefold(1));
}

inline std::string json_id(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw ParseError("element id must be a string or integer, got " + j.dump());
}

inline SubobjectLattice lattice_from_json(const Json& j) {
  try {
    std::vector<SubobjectLattice::Element> elements;
    for (const Json& e : j.at("elements")) {
      elements.push_back({json_id(e.at("id")), KClass{integer_from_json(e.at("C0")),
                                                      rational_from_json(e.at("C1"))}});
    }
    std::vector<std::pair<std::string, std::string>> leq;
    for (const Json& p : j.at("leq")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("leq entries are [a, b] pairs");
      leq.emplace_back(json_id(p[0]), json_id(p[1]));
    }
    return SubobjectLattice(std::move(elements), leq);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed lattice: ") + e.what());
  }
}

inline Json lattice_to_json(const SubobjectLattice& L) {
  Json elements = Json::array();
  Json leq = Json::array();
  for (int a = 0; a < L.size(); ++a) {
    elements.push_back(
        {{"id", L.id(a)}, {"C0", integer_to_json(L.label(a).c0)}, {"C1", rational_to_json(L.label(a).c1)}});
    for (int b = 0; b < L.size(); ++b) {
      if (L.less(a, b)) leq.push_back({L.id(a), L.id(b)});
    }
  }
  return Json{{"elements", elements}, {"leq", leq}};
}

inline Json verdict_to_json(const Verdict& v) {
  return Json{{"verdict", to_string(v.kind)},
              {"witness_index", v.witness_index},
              {"criterion", v.criterion},
              {"threshold", integer_to_json(v.threshold)}};
}

inline Json filtration_to_json(const SubobjectLattice& L, const HNFiltration& h) {
  Json chain = Json::array();
  for (int x : h.chain()) chain.push_back(L.id(x));
  Json slopes = Json::array();
  for (const SlopeValue& s : h.slopes) slopes.push_back(slope_to_json(s));
  Json factors = Json::array();
  for (const KClass& k : h.factors) {
    factors.push_back({{"C0", integer_to_json(k.c0)}, {"C1", rational_to_json(k.c1)}});
  }
  return Json{{"chain", chain}, {"factors", factors}, {"slopes", slopes}};
}

inline Json report_to_json(const Report& r, bool with_candidates = false) {
  Json j{{"suite", r.suite},
         {"cases", r.cases},
         {"failures", r.failures},
         {"counterexamples", r.counterexamples},
         {"counters", r.counters}};
  if (with_candidates) {
    Json list = Json::array();
    for (const CandidateRecord& c : r.candidates) {
      list.push_back({{"side", c.side}, {"candidate", c.candidate}, {"branch", c.branch}, {"pass", c.pass}});
    }
    j["candidates"] = list;
  }
  return j;
}

inline Json classification_to_json(const std::vector<CaseResult>& cases) {
  Json out = Json::array();
  for (const CaseResult& c : cases) {
    Json row{{"case", c.case_id}, {"pass", c.pass}, {"support", c.support}};
    if (c.violated) row["violated"] = *c.violated;
    out.push_back(row);
  }
  return out;
}

}  // namespace fmstab
