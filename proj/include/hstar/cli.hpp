#pragma once

// JSON documents in, JSON documents out: one entry point per command of the
// hstar tool. Needs nlohmann/json on the include path.

#include "hstar/apolarity.hpp"
#include "hstar/field.hpp"
#include "hstar/fixtures.hpp"
#include "hstar/polynomial.hpp"
#include "hstar/power.hpp"
#include "hstar/projective.hpp"
#include "hstar/star.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hstar::cli {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Malformed or ill-typed input document.
class SchemaError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Which radicands input scalars may use and explicit witnesses may live in.
struct FieldPolicy {
  /// nullopt: any single radicand. 0: rationals only. m: Q(sqrt m).
  std::optional<long> radicand;

  static FieldPolicy parse(const std::string& text) {
    if (text == "rational") return {0L};
    const std::string prefix = "quadext:";
    if (text.rfind(prefix, 0) == 0) {
      const std::string digits = text.substr(prefix.size());
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 15)
        throw SchemaError("bad --field value: " + text);
      const long m = std::stol(digits);
      if (!valid_radicand(m)) throw SchemaError("radicand " + digits + " is not a square-free integer > 1");
      return {m};
    }
    throw SchemaError("--field must be rational or quadext:<m>, got " + text);
  }

  [[nodiscard]] bool allows(long m) const { return m == 0 || !radicand || *radicand == m; }
};

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> attempts;
  FieldPolicy field;
};

struct Outcome {
  json document;
  int exit_code = 0;
};

// ---------------------------------------------------------------------------
// Text forms of exact values.

inline std::string point_text(const ProjPoint& p) {
  // Rational points: primitive integer vector, first nonzero entry positive.
  bool rational = true;
  for (const auto& c : p.coords()) rational = rational && c.is_rational();
  if (!rational) return p.canonical().str();
  mpz_class lcm = 1;
  for (const auto& c : p.coords()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.as_rational().denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : p.coords()) {
    const auto& q = c.as_rational();
    ints.push_back(q.numerator() * (lcm / q.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  int sign = 0;
  for (const auto& v : ints)
    if (sign == 0) sign = sgn(v);
  Coords out;
  for (const auto& v : ints) out.emplace_back(Rational(mpz_class(v * sign / g)));
  return hstar::detail::bracket(out);
}

inline json scalars_json(const Coords& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline json points_json(const std::vector<ProjPoint>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point_text(p));
  return a;
}

/// Points exactly as stored, for output where the scale matters.
inline json raw_points_json(const std::vector<ProjPoint>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

inline json forms_json(const std::vector<LinearForm>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f.bracket_str());
  return a;
}

inline json polynomial_json(const HomogeneousForm& f) {
  return {{"polynomial", f.str()}, {"variables", f.nvars()}, {"degree", f.degree()}};
}

inline std::string field_name(long m) { return m == 0 ? "Q" : "Q(sqrt(" + std::to_string(m) + "))"; }

// ---------------------------------------------------------------------------
// Reading input documents.

class Reader {
public:
  Reader(const json& doc, FieldPolicy policy) : doc_(doc), policy_(policy) {
    if (!doc_.is_object()) throw SchemaError("input document must be an object");
    if (doc_.contains("format_version")) {
      const auto& v = doc_["format_version"];
      if (!v.is_number_integer() || v.get<long>() != kFormatVersion)
        throw SchemaError("unsupported format_version " + v.dump() + ", expected " + std::to_string(kFormatVersion));
    }
  }

  [[nodiscard]] bool has(const char* key) const { return doc_.contains(key) && !doc_[key].is_null(); }

  [[nodiscard]] const json& field(const char* key) const {
    if (!has(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
    return doc_[key];
  }

  [[nodiscard]] std::string text(const char* key) const { return as_text(field(key), key); }

  [[nodiscard]] std::size_t count(const char* key) const {
    const auto& v = field(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError(std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
  }

  [[nodiscard]] std::optional<std::size_t> optional_count(const char* key) const {
    if (!has(key)) return std::nullopt;
    return count(key);
  }

  [[nodiscard]] ProjPoint point(const char* key) const { return point_of(field(key), key); }

  [[nodiscard]] std::vector<ProjPoint> points(const char* key) const {
    std::vector<ProjPoint> out;
    for (const auto& v : array(key)) out.push_back(point_of(v, key));
    return out;
  }

  [[nodiscard]] LinearForm form(const char* key, std::optional<std::size_t> nvars = std::nullopt) const {
    return form_of(field(key), key, nvars);
  }

  [[nodiscard]] std::vector<LinearForm> forms(const char* key) const {
    std::vector<LinearForm> out;
    for (const auto& v : array(key))
      out.push_back(form_of(v, key, out.empty() ? std::nullopt : std::optional(out.front().coeffs().size())));
    return out;
  }

  [[nodiscard]] HomogeneousForm polynomial() const {
    const auto nvars = optional_count("variables");
    HomogeneousForm f = [&] {
      try {
        return HomogeneousForm::parse(text("polynomial"), nvars);
      } catch (const ParseError& e) {
        throw SchemaError(std::string("field \"polynomial\": ") + e.what());
      }
    }();
    for (const auto& [e, c] : f.terms()) check_field(c, "polynomial");
    return f;
  }

private:
  static std::string as_text(const json& v, const char* key) {
    if (!v.is_string()) throw SchemaError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
  }

  [[nodiscard]] const json& array(const char* key) const {
    const auto& v = field(key);
    if (!v.is_array() || v.empty()) throw SchemaError(std::string("field \"") + key + "\" must be a non-empty array");
    return v;
  }

  void check_field(const Scalar& s, const char* key) const {
    if (!policy_.allows(s.radicand()))
      throw SchemaError(std::string("field \"") + key + "\": scalar " + s.str() + " lies outside " +
                        field_name(*policy_.radicand));
  }

  [[nodiscard]] ProjPoint point_of(const json& v, const char* key) const {
    const std::string t = as_text(v, key);
    try {
      ProjPoint p = ProjPoint::parse(t);
      for (const auto& c : p.coords()) check_field(c, key);
      return p;
    } catch (const SchemaError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("field \"") + key + "\": " + e.what());
    } catch (const GeometryError& e) {
      throw SchemaError(std::string("field \"") + key + "\": " + e.what());
    }
  }

  [[nodiscard]] LinearForm form_of(const json& v, const char* key, std::optional<std::size_t> nvars) const {
    const std::string t = as_text(v, key);
    try {
      LinearForm l = parse_linear_form(t, nvars);
      for (const auto& c : l.coeffs()) check_field(c, key);
      return l;
    } catch (const SchemaError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("field \"") + key + "\": " + e.what());
    } catch (const GeometryError& e) {
      throw SchemaError(std::string("field \"") + key + "\": " + e.what());
    }
  }

  const json& doc_;
  FieldPolicy policy_;
};

// ---------------------------------------------------------------------------
// Commands.

namespace detail {

inline json witness_json(const HscWitness& w, const FieldPolicy& policy) {
  json out{{"squares", scalars_json(w.squares)}};
  long m = 0;
  if (w.explicit_set)
    for (const auto& a : w.explicit_set->hyperplane.coeffs()) m = std::max(m, a.radicand());
  if (w.explicit_set && policy.allows(m)) {
    out["field"] = field_name(m);
    out["hyperplane"] = w.explicit_set->hyperplane.bracket_str();
    out["points"] = points_json(w.explicit_set->points);
  } else {
    out["field"] = "C";
  }
  return out;
}

inline json classification_json(const Classification& c, const FieldPolicy& policy) {
  json out{{"verdict", to_string(c.verdict)}};
  if (c.reciprocal_rank) out["reciprocal_rank"] = *c.reciprocal_rank;
  if (c.witness) out["witness"] = witness_json(*c.witness, policy);
  return out;
}

inline json flats_json(const StarConfig& config) {
  json flats = json::array();
  for (const auto& f : config.flats()) {
    json entry{{"indices", f.indices}};
    if (f.point) {
      entry["point"] = point_text(*f.point);
    } else {
      json basis = json::array();
      for (const auto& b : f.basis) basis.push_back(hstar::detail::bracket(b));
      entry["basis"] = basis;
    }
    flats.push_back(entry);
  }
  return flats;
}

/// forms directly, or H_j = P_j * hyperplane built from points.
inline std::vector<LinearForm> read_family(const Reader& in) {
  if (in.has("forms")) return in.forms("forms");
  if (in.has("hyperplane") && in.has("points")) {
    std::vector<LinearForm> out;
    const auto h = in.form("hyperplane");
    for (const auto& p : in.points("points")) out.push_back(hadamard(p, h));
    return out;
  }
  throw SchemaError("expected \"forms\", or \"hyperplane\" with \"points\"");
}

/// Points given directly, or the codim-n star configuration of "forms".
inline std::vector<ProjPoint> read_points_or_config(const Reader& in) {
  if (in.has("points")) return in.points("points");
  if (in.has("forms")) {
    const auto forms = in.forms("forms");
    return build_star_config(forms, forms.front().dimension()).points();
  }
  throw SchemaError("expected \"points\" or \"forms\"");
}

inline Outcome product(const Reader& in) {
  if (in.has("hyperplane")) {
    const auto h = in.form("hyperplane");
    json out{{"form", hadamard(in.point("point"), h).bracket_str()}};
    return {out};
  }
  const auto ps = in.points("points");
  ProjPoint acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = hadamard(acc, ps[i]);
  return {json{{"point", point_text(acc)}}};
}

inline Outcome cremona_cmd(const Reader& in) {
  if (in.has("point")) return {json{{"point", point_text(cremona(in.point("point")))}}};
  std::vector<ProjPoint> images;
  for (const auto& p : in.points("points")) images.push_back(cremona(p));
  return {json{{"points", points_json(images)}}};
}

inline Outcome general_position_cmd(const Reader& in) {
  const auto ps = in.points("points");
  json out{{"general_position", general_position(ps)}};
  return {out};
}

inline Outcome classify_cmd(const Reader& in, const FieldPolicy& policy) {
  const auto forms = read_family(in);
  const auto c = classify(forms);
  json out{{"forms", forms_json(forms)}};
  out.update(classification_json(c, policy));
  if (in.has("hyperplane") && in.has("points") && !in.has("forms")) {
    std::vector<ProjPoint> images;
    for (const auto& p : in.points("points")) images.push_back(cremona(p));
    out["cremona_general_position"] = general_position(images);
  }
  if (c.verdict == Verdict::NotGenerallyLinear) {
    out["error"] = {{"kind", "domain"}, {"message", "forms are not generally linear"}};
    return {out, 1};
  }
  return {out};
}

inline Outcome star_config_cmd(const Reader& in) {
  const auto forms = read_family(in);
  const auto config = build_star_config(forms, in.count("codim"));
  json out{{"codim", config.codim()}, {"dimension", config.dimension()}, {"flats", flats_json(config)}};
  if (config.codim() == config.dimension()) out["points"] = points_json(config.points());
  return {out};
}

inline Outcome power_cmd(const Reader& in, const FieldPolicy& policy) {
  const PointSet xs(in.points("points"));
  const std::size_t r = in.optional_count("r").value_or(xs.dimension());
  json out{{"r", r}, {"power", points_json(squarefree_power(xs, r).points())}};
  if (in.has("p") || in.has("q")) {
    const auto res = hsc_power_pipeline(xs, in.point("p"), in.point("q"));
    json pipe{{"line_power", res.line_power.bracket_str()},
              {"hyperplanes", forms_json(res.hyperplanes)},
              {"condition_holds", res.condition_holds}};
    pipe.update(classification_json(res.classification, policy));
    out["pipeline"] = pipe;
  }
  return {out};
}

inline Outcome perp_cmd(const Reader& in) {
  const auto f = in.polynomial();
  const auto e = static_cast<unsigned>(in.count("degree"));
  const auto comp = perp_component(f, e);
  json basis = json::array();
  for (const auto& g : comp.basis) basis.push_back(g.str());
  return {json{{"degree", e}, {"dimension", comp.basis.size()}, {"basis", basis}}};
}

inline Outcome apolar_cmd(const Reader& in) {
  const auto f = in.polynomial();
  const auto points = read_points_or_config(in);
  const auto alpha = waring_coefficients(points, f);
  json out{{"apolar", alpha.has_value()}, {"points", raw_points_json(points)}};
  if (alpha) out["coefficients"] = scalars_json(*alpha);
  return {out};
}

inline Outcome waring_cmd(const Reader& in) {
  const auto f = in.polynomial();
  const auto points = read_points_or_config(in);
  const auto alpha = waring_coefficients(points, f);
  if (!alpha) throw std::domain_error("the points are not apolar to " + f.str());
  json terms = json::array();
  for (std::size_t i = 0; i < points.size(); ++i)
    terms.push_back({{"coefficient", (*alpha)[i].str()}, {"point", points[i].str()}});
  json out{{"terms", terms}, {"reconstructs", expand_waring(points, *alpha, f.degree()) == f}};
  return {out};
}

inline Outcome search_cmd(const Reader& in, const Options& opt, const FieldPolicy& policy) {
  const auto f = in.polynomial();
  const std::size_t r = in.count("r");
  const std::uint64_t seed = opt.seed.value_or(in.optional_count("seed").value_or(0));
  const std::size_t attempts = opt.attempts.value_or(in.optional_count("attempts").value_or(20));
  const auto found = random_apolar_hsc(f, r, attempts, seed);
  json out{{"seed", seed}, {"attempts", attempts}, {"found", found.has_value()}};
  if (!found) {
    out["error"] = {{"kind", "domain"}, {"message", "no apolar HSC found within " + std::to_string(attempts) + " attempts"}};
    return {out, 1};
  }
  out["attempts_used"] = found->attempts_used;
  out["hyperplane"] = found->hyperplane.bracket_str();
  out["factor_points"] = points_json(found->factor_points);
  out["forms"] = forms_json(found->config.forms());
  out["points"] = raw_points_json(found->config.points());
  out["coefficients"] = scalars_json(found->waring);
  out.update(classification_json(classify(found->config.forms()), policy));
  return {out};
}

inline Outcome verify_paper_cmd() {
  json fixtures = json::array();
  json report = json::array();
  bool all = true;
  for (const auto& fx : fixtures::verify_all()) {
    json checks = json::array();
    for (const auto& c : fx.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    fixtures.push_back({{"name", fx.name}, {"passed", fx.passed()}, {"checks", checks}});
    report.push_back(std::string(fx.passed() ? "PASS " : "FAIL ") + fx.name);
    all = all && fx.passed();
  }
  return {json{{"passed", all}, {"report", report}, {"fixtures", fixtures}}, all ? 0 : 1};
}

inline json error_document(const std::string& command, const std::string& kind, const std::string& message) {
  return {{"format_version", kFormatVersion}, {"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"product", "cremona", "general-position", "classify",
                                              "star-config", "power", "perp", "apolar",
                                              "waring", "search-ahsc", "verify-paper"};
  return names;
}

/// Runs one command. Schema problems give exit code 2, mathematical failures
/// exit code 1 with the library message verbatim.
inline Outcome run(const std::string& command, const json& input, const Options& opt = {}) {
  Outcome out;
  try {
    const Reader in(input, opt.field);
    if (command == "product") out = detail::product(in);
    else if (command == "cremona") out = detail::cremona_cmd(in);
    else if (command == "general-position") out = detail::general_position_cmd(in);
    else if (command == "classify") out = detail::classify_cmd(in, opt.field);
    else if (command == "star-config") out = detail::star_config_cmd(in);
    else if (command == "power") out = detail::power_cmd(in, opt.field);
    else if (command == "perp") out = detail::perp_cmd(in);
    else if (command == "apolar") out = detail::apolar_cmd(in);
    else if (command == "waring") out = detail::waring_cmd(in);
    else if (command == "search-ahsc") out = detail::search_cmd(in, opt, opt.field);
    else if (command == "verify-paper") out = detail::verify_paper_cmd();
    else throw SchemaError("unknown command \"" + command + "\"");
  } catch (const SchemaError& e) {
    return {detail::error_document(command, "schema", e.what()), 2};
  } catch (const ParseError& e) {
    return {detail::error_document(command, "schema", e.what()), 2};
  } catch (const json::exception& e) {
    return {detail::error_document(command, "schema", e.what()), 2};
  } catch (const std::exception& e) {
    return {detail::error_document(command, "domain", e.what()), 1};
  }
  json doc{{"format_version", kFormatVersion}, {"command", command}};
  doc.update(out.document);
  return {doc, out.exit_code};
}

}  // namespace hstar::cli
