// fmstab: command-line front end for the fmstab library.
//
// Exit status: 0 success, 1 verification failure, 2 malformed input,
// 3 precondition violation.

#include "fmstab/fmstab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

using namespace fmstab;

namespace {

struct Globals {
  std::string geometry = "threefold";
  std::int64_t d = 1;
  std::int64_t g = 1;
  bool json = false;
  std::string out;
};

Geometry make_geometry(const Globals& gl) {
  if (gl.geometry == "threefold") return Geometry::threefold(gl.d);
  if (gl.geometry == "surface") return Geometry::surface(gl.g);
  throw PreconditionError("--geometry must be threefold or surface");
}

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

// Accepts {"matrix": [[...],[...]], "geometry": {...}} or a flat array of entries.
ChernCharacter read_character(const std::string& path, const Geometry& fallback) {
  const Json j = parse_json(slurp(path), path.empty() ? "stdin" : path);
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != 2 * fallback.base_rank()) {
      throw ParseError("flat character needs " + std::to_string(2 * fallback.base_rank()) + " entries");
    }
    std::vector<Integer> entries;
    for (const Json& x : j) entries.push_back(integer_from_json(x));
    return ChernCharacter(fallback, entries);
  }
  if (!j.is_object()) throw ParseError("character must be an object or an array");
  return chern_from_json(j, fallback);
}

Rational parse_rational_flag(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw ParseError("not a rational: '" + s + "'");
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern characters, Fourier-Mukai transforms and stability on C x S"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--geometry", gl.geometry, "threefold or surface")
      ->check(CLI::IsMember({"threefold", "surface"}));
  app.add_option("--d", gl.d, "degree of the polarised surface S (threefold)");
  app.add_option("--g", gl.g, "genus of the curve C (surface)");
  app.add_flag("--json", gl.json, "machine-readable output");
  app.add_option("--out", gl.out, "write results to FILE");

  std::string input;
  std::string input2;

  auto* transform = app.add_subcommand("transform", "cohomological Fourier-Mukai transform");
  bool inverse = false;
  transform->add_option("input", input, "character JSON (default stdin)");
  transform->add_flag("--inverse", inverse, "also print the inverse transform");

  auto* slope_cmd = app.add_subcommand("slope", "slopes of a character");
  std::string alpha = "1";
  std::string beta = "1";
  slope_cmd->add_option("input", input, "character JSON (default stdin)");
  slope_cmd->add_option("--alpha", alpha, "coefficient of D (resp. f) in w");
  slope_cmd->add_option("--beta", beta, "coefficient of H (resp. h) in w");

  auto* compare_cmd = app.add_subcommand("compare", "Gieseker comparison at a fiber-like polarisation");
  int dim = 3;
  std::string surface_case;
  compare_cmd->add_option("sub", input, "sub-character JSON")->required();
  compare_cmd->add_option("e", input2, "character JSON")->required();
  compare_cmd->add_option("--dim", dim, "support dimension on the threefold")->check(CLI::IsMember({2, 3}));
  compare_cmd->add_option("--surface-case", surface_case, "tf or 1d")->check(CLI::IsMember({"tf", "1d"}));

  auto* classify = app.add_subcommand("classify", "positivity case table");
  classify->add_option("input", input, "character JSON (default stdin)");

  auto* enumerate = app.add_subcommand("enumerate-subs", "admissible sub-characters as JSON lines");
  std::int64_t enum_bound = 3;
  enumerate->add_option("input", input, "character JSON (default stdin)");
  enumerate->add_option("--bound", enum_bound, "box half-width");

  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a lattice fixture");
  hn->add_option("input", input, "lattice JSON (default stdin)");

  auto* verify = app.add_subcommand("verify", "exhaustive verification suites");
  std::string suite;
  std::int64_t bound = 3;
  std::string ch_text = "0,0,0,1,0,2";
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"involution", "slopes", "chi", "theorem1", "surface", "lemma20"}));
  verify->add_option("--bound", bound, "box half-width");
  verify->add_option("--ch", ch_text, "comma-separated character for theorem1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Output out(gl.out);
    std::ostream& os = out.os();

    if (*transform) {
      const ChernCharacter v = read_character(input, make_geometry(gl));
      const ChernCharacter t = fm_transform(v);
      if (gl.json) {
        Json j{{"input", chern_to_json(v)}, {"transform", chern_to_json(t)}};
        if (inverse) j["inverse"] = chern_to_json(fm_inverse(v));
        os << j.dump(2) << "\n";
      } else {
        os << "transform: " << t.str() << "\n";
        if (inverse) os << "inverse:   " << fm_inverse(v).str() << "\n";
      }
      return 0;
    }

    if (*slope_cmd) {
      const ChernCharacter v = read_character(input, make_geometry(gl));
      const DivisorClass w{parse_rational_flag(alpha), parse_rational_flag(beta)};
      const SlopeValue muh = mu_H(v, w);
      const SlopeValue muf = mu_f(v);
      const SlopeValue mu_up = mu_upper_star(v);
      std::optional<SlopeValue> mu_low;
      if (v.geometry().is_threefold()) mu_low = mu_lower_star(v);
      if (gl.json) {
        Json j{{"mu_H", slope_to_json(muh)}, {"mu_f", slope_to_json(muf)}, {"mu_upper_star", slope_to_json(mu_up)}};
        j["mu_lower_star"] = mu_low ? slope_to_json(*mu_low) : Json(nullptr);
        os << j.dump(2) << "\n";
      } else {
        os << "mu_H  = " << muh << "\n"
           << "mu_f  = " << muf << "\n"
           << "mu^*  = " << mu_up << "\n"
           << "mu_*  = " << (mu_low ? mu_low->str() : std::string("undefined on a surface")) << "\n";
      }
      return 0;
    }

    if (*compare_cmd) {
      const Geometry geom = make_geometry(gl);
      const ChernCharacter sub = read_character(input, geom);
      const ChernCharacter e = read_character(input2, geom);
      Verdict v;
      if (e.geometry().is_surface()) {
        if (surface_case.empty()) throw PreconditionError("surface comparison needs --surface-case tf|1d");
        v = surface_compare(sub, e, surface_case == "tf" ? SurfaceCase::torsion_free : SurfaceCase::one_dimensional);
      } else {
        v = dim == 3 ? destabilizes_3d(sub, e) : destabilizes_2d(sub, e);
      }
      if (gl.json) {
        os << verdict_to_json(v).dump(2) << "\n";
      } else {
        os << "verdict:   " << to_string(v.kind) << "\n"
           << "criterion: " << v.criterion << "\n"
           << "N0:        " << v.threshold.str() << "\n";
      }
      return 0;
    }

    if (*classify) {
      const ChernCharacter v = read_character(input, make_geometry(gl));
      const auto cases = classify_pattern(v);
      if (gl.json) {
        os << Json{{"character", chern_to_json(v)}, {"cases", classification_to_json(cases)}}.dump(2) << "\n";
      } else {
        os << v.str() << "\n";
        if (cases.empty()) os << "  no vanishing pattern matched\n";
        for (const CaseResult& c : cases) {
          os << "  case " << c.case_id << ": " << (c.pass ? "pass" : "FAIL (" + *c.violated + ")") << "  ["
             << c.support << "]\n";
        }
      }
      return passes_positivity(v) ? 0 : 1;
    }

    if (*enumerate) {
      const ChernCharacter v = read_character(input, make_geometry(gl));
      SubcharacterStream stream(v, enum_bound);
      while (auto next = stream.next()) os << chern_to_json(*next).dump() << "\n";
      return 0;
    }

    if (*hn) {
      const SubobjectLattice L = lattice_from_json(parse_json(slurp(input), input.empty() ? "stdin" : input));
      const HNFiltration h = hn_filtration(L);
      if (gl.json) {
        os << filtration_to_json(L, h).dump(2) << "\n";
      } else {
        std::vector<std::string> ids;
        for (int x : h.chain()) ids.push_back(L.id(x));
        std::vector<std::string> slopes;
        for (const SlopeValue& s : h.slopes) slopes.push_back(s.str());
        os << "filtration: " << join(ids, " <= ") << "\n"
           << "slopes: " << join(slopes, ", ") << "\n";
      }
      return 0;
    }

    if (*verify) {
      Report r;
      if (suite == "involution") {
        r = verify_involution(bound, make_geometry(gl));
      } else if (suite == "slopes") {
        r = verify_slope_correspondence(bound, gl.d);
      } else if (suite == "chi") {
        r = verify_chi_correspondence(bound, gl.d);
      } else if (suite == "theorem1") {
        std::vector<Integer> entries;
        std::stringstream ss(ch_text);
        for (std::string item; std::getline(ss, item, ',');) entries.push_back(parse_integer(item));
        r = verify_theorem1_box(ChernCharacter(Geometry::threefold(gl.d), entries), bound);
      } else if (suite == "surface") {
        r = verify_surface_identities(bound, gl.g);
      } else {
        r = verify_lemma20_table(bound, gl.g);
      }
      if (gl.json) {
        os << report_to_json(r).dump(2) << "\n";
      } else {
        os << "suite: " << r.suite << "\n"
           << "cases: " << r.cases << ", failures: " << r.failures << "\n";
        for (const auto& [name, count] : r.counters) os << "  " << name << ": " << count << "\n";
        for (const std::string& c : r.counterexamples) os << "  counterexample: " << c << "\n";
      }
      return r.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
