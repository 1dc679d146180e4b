#pragma once

// File formats.
//
// Ideal (JSON):       {"ring": "R"|"S", "n": 7, "basis": ["x7^2", ...],
//                      "weights": [11, 10, ...]}   weights optional, listed x_n down to x_1
// Marked set (JSON):  {"ideal": "file.ideal" | {...inline ideal...}, "m": 3,
//                      "parameters": ["t"], "polys": [{"head": "x7^2", "poly": "..."}]}
//                     m and parameters optional; a relative ideal path is resolved
//                     against the marked-set file's directory.
// Point (JSON):       {"parameters": 512, "values": ["0", "1/2", ...]}
// Scheme (text):      header lines, the parameter catalogue, then one generator per line
//                     followed by "  # " and its provenance.

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "markedbases/homog.hpp"
#include "markedbases/scheme.hpp"

namespace mb {

using Json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json read_json_file(const std::filesystem::path& p) {
  try {
    return Json::parse(read_text_file(p));
  } catch (const Json::parse_error& e) {
    throw FormatError(p.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- ideals

struct IdealFile {
  StronglyStableIdeal ideal;
  std::optional<std::vector<long>> weights;
};

inline Ring parse_ring(const std::string& s) {
  if (s == "R") return Ring::R;
  if (s == "S") return Ring::S;
  throw FormatError("ring must be \"R\" or \"S\", got \"" + s + "\"");
}

inline IdealFile ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("n") || !j.contains("basis"))
    throw FormatError("an ideal needs the fields ring, n and basis");
  IdealFile f;
  int n = j.at("n").get<int>();
  std::vector<std::string> gens = j.at("basis").get<std::vector<std::string>>();
  f.ideal = make_ideal(parse_ring(j.at("ring").get<std::string>()), n, gens);
  if (j.contains("weights")) {
    auto w = j.at("weights").get<std::vector<long>>();
    if (static_cast<int>(w.size()) != n) throw FormatError("weights must list one entry per variable x_n..x_1");
    f.weights = std::move(w);
  }
  return f;
}

inline Json ideal_to_json(const StronglyStableIdeal& J, const std::optional<std::vector<long>>& weights = std::nullopt) {
  Json j;
  j["ring"] = ring_name(J.ring());
  j["n"] = J.num_vars();
  Json b = Json::array();
  for (auto& g : J.basis()) b.push_back(to_string(g));
  j["basis"] = std::move(b);
  if (weights) j["weights"] = *weights;
  return j;
}

inline IdealFile load_ideal(const std::filesystem::path& p) { return ideal_from_json(read_json_file(p)); }

// ----------------------------------------------------------- marked sets

struct MarkedSetFile {
  StronglyStableIdeal ideal;
  std::optional<int> level;
  std::vector<std::string> parameters;
  ParamTable table;
  std::vector<std::pair<Monomial, ParamPoly>> polys;

  int resolve_level(std::optional<int> override_m) const {
    if (override_m) return *override_m;
    if (level) return *level;
    throw FormatError("no level m: give it in the file or on the command line");
  }

  /// Specializes the parameters to `values` (one per declared parameter).
  MarkedSet<Rational> scalar(std::optional<int> m = std::nullopt, const std::vector<Rational>& values = {}) const {
    if (values.size() != parameters.size())
      throw FormatError("marked set declares " + std::to_string(parameters.size()) + " parameter(s), " +
                        std::to_string(values.size()) + " value(s) given");
    std::vector<MarkedPolynomial<Rational>> ps;
    for (auto& [h, f] : polys) ps.push_back(MarkedPolynomial<Rational>::from_poly(h, substitute_point(f, values)));
    return MarkedSet<Rational>(ideal, resolve_level(m), std::move(ps));
  }

  /// Coefficients in ℚ[parameters].
  MarkedSet<CoeffPoly> symbolic(std::optional<int> m = std::nullopt) const {
    std::vector<MarkedPolynomial<CoeffPoly>> ps;
    for (auto& [h, f] : polys) ps.push_back(MarkedPolynomial<CoeffPoly>::from_poly(h, f));
    return MarkedSet<CoeffPoly>(ideal, resolve_level(m), std::move(ps));
  }

  /// For ring S: a J_{≥m}-marked set with scalar coefficients.
  HomogMarkedSet<Rational> homogeneous(std::optional<int> m = std::nullopt) const {
    if (!parameters.empty()) throw FormatError("homogeneous marked sets must have scalar coefficients");
    std::vector<HomogMarkedPolynomial<Rational>> ps;
    for (auto& [h, f] : polys) {
      auto g = to_scalar(f);
      if (g.coeff(h) != 1) throw InvalidMarkedSet("head " + to_string(h) + " must appear with coefficient 1");
      g.add_term(h, Rational(-1));
      ps.push_back({h, -g, false});
    }
    return HomogMarkedSet<Rational>(ideal, resolve_level(m), std::move(ps));
  }
};

inline MarkedSetFile marked_set_from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
  if (!j.is_object() || !j.contains("ideal") || !j.contains("polys"))
    throw FormatError("a marked set needs the fields ideal and polys");
  MarkedSetFile f;
  const auto& ij = j.at("ideal");
  f.ideal = ij.is_string() ? load_ideal(base_dir / ij.get<std::string>()).ideal : ideal_from_json(ij).ideal;
  if (j.contains("m")) f.level = j.at("m").get<int>();
  if (j.contains("parameters")) f.parameters = j.at("parameters").get<std::vector<std::string>>();
  for (auto& p : f.parameters) f.table.index_of(p);
  int n = f.ideal.num_vars();
  for (auto& e : j.at("polys")) {
    if (!e.contains("head") || !e.contains("poly")) throw FormatError("each polynomial needs head and poly");
    auto head = parse_monomial(e.at("head").get<std::string>(), n);
    auto poly = parse_param_poly(e.at("poly").get<std::string>(), n, f.table);
    if (f.table.size() != f.parameters.size())
      throw FormatError("undeclared parameter '" + f.table.name(static_cast<std::uint32_t>(f.parameters.size())) +
                        "' in the polynomial with head " + to_string(head));
    f.polys.emplace_back(head, std::move(poly));
  }
  return f;
}

inline MarkedSetFile load_marked_set(const std::filesystem::path& p) {
  return marked_set_from_json(read_json_file(p), p.parent_path());
}

inline Json marked_set_to_json(const MarkedSet<Rational>& G) {
  Json j;
  j["ideal"] = ideal_to_json(G.ideal());
  j["m"] = G.level();
  Json ps = Json::array();
  for (auto& f : G.polys()) ps.push_back({{"head", to_string(f.head)}, {"poly", to_string(f.poly())}});
  j["polys"] = std::move(ps);
  return j;
}

inline Json marked_set_to_json(const HomogMarkedSet<Rational>& H) {
  Json j;
  j["ideal"] = ideal_to_json(H.ideal());
  j["m"] = H.level();
  Json ps = Json::array();
  for (auto& f : H.polys())
    ps.push_back({{"head", to_string(f.head)}, {"poly", to_string(f.poly())}, {"superminimal", f.superminimal}});
  j["polys"] = std::move(ps);
  return j;
}

// ---------------------------------------------------------------- points

inline Json point_to_json(const FamilyPoint& p) {
  Json v = Json::array();
  for (auto& x : p.values) v.push_back(to_string(x));
  return Json{{"parameters", p.values.size()}, {"values", std::move(v)}};
}

inline FamilyPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values")) throw FormatError("a point needs the field values");
  FamilyPoint p;
  for (auto& v : j.at("values")) p.values.push_back(parse_rational(v.get<std::string>()));
  if (j.contains("parameters") && j.at("parameters").get<std::size_t>() != p.values.size())
    throw FormatError("point lists " + std::to_string(p.values.size()) + " values but declares " +
                      std::to_string(j.at("parameters").get<std::size_t>()));
  return p;
}

// ---------------------------------------------------------------- schemes

inline constexpr const char* kSchemeMagic = "markedbases-scheme 1";

inline void write_scheme(std::ostream& out, const SchemeIdeal& S) {
  const auto& J = S.ideal;
  out << kSchemeMagic << "\n";
  out << "ring " << ring_name(J.ring()) << "\n";
  out << "vars " << J.num_vars() << "\n";
  out << "basis";
  for (auto& g : J.basis()) out << " " << to_string(g);
  out << "\n";
  out << "level " << S.level << "\n";
  out << "optimized-level " << S.optimized_level << "\n";
  out << "reduction2 " << (S.reduction2_skipped ? "skipped" : "run") << "\n";
  out << "raw-count " << S.raw_count << "\n";
  out << "parameters " << S.catalogue.size() << "\n";
  const auto& names = S.catalogue.names();
  for (std::uint32_t k = 0; k < S.catalogue.size(); ++k) {
    auto& e = S.catalogue.entries()[k];
    out << "p " << k << " " << names.name(k) << " head=" << to_string(e.alpha) << " monomial=" << to_string(e.gamma)
        << "\n";
  }
  out << "generators " << S.generators.size() << "\n";
  for (auto& g : S.generators) out << to_string(g.poly, &names) << "  # " << g.provenance.describe() << "\n";
}

namespace detail {

inline std::string expect_field(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("scheme file ends before '" + key + "'");
  if (line.rfind(key + " ", 0) != 0 && line != key) throw FormatError("expected '" + key + "', got '" + line + "'");
  return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
}

inline std::string after(const std::string& token, const std::string& prefix) {
  if (token.rfind(prefix, 0) != 0) throw FormatError("expected '" + prefix + "...' in provenance, got '" + token + "'");
  return token.substr(prefix.size());
}

inline Provenance parse_provenance(const std::string& text, int n) {
  std::istringstream ss(text);
  std::string kind, head, third, fourth;
  ss >> kind >> head >> third;
  Provenance p;
  p.head = parse_monomial(after(head, "head="), n);
  if (kind == "reduction1") {
    p.source = Provenance::Source::Reduction1;
    p.var = std::stoi(after(third, "var=x"));
    ss >> fourth;
    p.gamma = parse_monomial(after(fourth, "coeff-of="), n);
  } else if (kind == "reduction2") {
    p.source = Provenance::Source::Reduction2;
    p.gamma = parse_monomial(after(third, "coeff-of="), n);
  } else {
    throw FormatError("unknown provenance '" + kind + "'");
  }
  return p;
}

}  // namespace detail

/// Reads back a scheme written by write_scheme; the catalogue is rebuilt and checked against the file.
inline SchemeIdeal read_scheme(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSchemeMagic) throw FormatError("not a scheme file");
  Ring ring = parse_ring(detail::expect_field(in, "ring"));
  int n = std::stoi(detail::expect_field(in, "vars"));
  std::istringstream bs(detail::expect_field(in, "basis"));
  std::vector<std::string> gens;
  for (std::string g; bs >> g;) gens.push_back(g);
  SchemeIdeal S;
  S.ideal = make_ideal(ring, n, gens);
  S.level = std::stoi(detail::expect_field(in, "level"));
  S.optimized_level = std::stoi(detail::expect_field(in, "optimized-level"));
  S.reduction2_skipped = detail::expect_field(in, "reduction2") == "skipped";
  S.raw_count = std::stoul(detail::expect_field(in, "raw-count"));
  S.catalogue = ParameterCatalogue(S.ideal, S.optimized_level);
  auto count = std::stoul(detail::expect_field(in, "parameters"));
  if (count != S.catalogue.size())
    throw FormatError("catalogue size " + std::to_string(count) + " does not match the ideal (" +
                      std::to_string(S.catalogue.size()) + ")");
  for (std::uint32_t k = 0; k < count; ++k) {
    std::istringstream ps(detail::expect_field(in, "p"));
    std::uint32_t idx;
    std::string name;
    ps >> idx >> name;
    if (idx != k || name != S.catalogue.names().name(k))
      throw FormatError("catalogue entry " + std::to_string(k) + " is '" + name + "', expected '" +
                        S.catalogue.names().name(k) + "'");
  }
  auto gcount = std::stoul(detail::expect_field(in, "generators"));
  ParamTable table = S.catalogue.names();
  for (std::size_t k = 0; k < gcount; ++k) {
    if (!std::getline(in, line)) throw FormatError("scheme file ends after " + std::to_string(k) + " generators");
    auto hash = line.find("  # ");
    if (hash == std::string::npos) throw FormatError("generator line without provenance: " + line);
    auto poly = parse_param_poly(line.substr(0, hash), n, table);
    if (table.size() != S.catalogue.size()) throw FormatError("generator uses an unknown parameter: " + line);
    if (poly.degree() > 0) throw FormatError("generator mentions x variables: " + line);
    Equation e;
    e.poly = poly.coeff(Monomial(n));
    e.provenance = detail::parse_provenance(line.substr(hash + 4), n);
    S.generators.push_back(std::move(e));
  }
  return S;
}

inline SchemeIdeal load_scheme(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw FormatError("cannot open " + p.string());
  return read_scheme(in);
}

}  // namespace mb
