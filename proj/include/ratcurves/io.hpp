// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ratcurves/cubic.hpp"
#include "ratcurves/error.hpp"
#include "ratcurves/form.hpp"
#include "ratcurves/rational.hpp"
#include "ratcurves/singular.hpp"

namespace ratcurves {

using Json = nlohmann::ordered_json;

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  fail(ErrorKind::MalformedInput, "expected a rational as a string");
}

inline int int_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (is_integer(r) && r.get_num().fits_sint_p()) return static_cast<int>(r.get_num().get_si());
  }
  fail(ErrorKind::MalformedInput, std::string("expected an integer for ") + what);
}

inline Json to_json(const HomogeneousForm& f) {
  Json coeffs = Json::array();
  for (const auto& [e, a] : f.terms()) coeffs.push_back({e[0], e[1], e[2], to_fraction_string(a)});
  return {{"degree", f.degree()}, {"coeffs", coeffs}};
}

inline HomogeneousForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail(ErrorKind::MalformedInput, "form needs \"degree\" and a \"coeffs\" array");
  const int d = int_from_json(j["degree"], "degree");
  if (d < 0) fail(ErrorKind::MalformedInput, "negative degree");
  HomogeneousForm f(d);
  for (const auto& t : j["coeffs"]) {
    if (!t.is_array() || t.size() != 4) fail(ErrorKind::MalformedInput, "coefficient entries are [a, b, c, \"num/den\"]");
    const Exponent e{int_from_json(t[0], "exponent"), int_from_json(t[1], "exponent"), int_from_json(t[2], "exponent")};
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != d)
      fail(ErrorKind::MalformedInput, "exponent triple does not sum to the degree");
    f.add(e, rational_from_json(t[3]));
  }
  return f;
}

inline Json to_json(const ProjectivePoint& p) {
  return Json::array({to_fraction_string(p[0]), to_fraction_string(p[1]), to_fraction_string(p[2])});
}

inline ProjectivePoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorKind::MalformedInput, "point must be a triple");
  const Vector3 v{rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) fail(ErrorKind::MalformedInput, "point has all coordinates zero");
  return ProjectivePoint(v);
}

/// "x,y,z" with rational entries.
inline ProjectivePoint parse_point(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(parse_rational(part));
  if (v.size() != 3) fail(ErrorKind::MalformedInput, "point must have three comma-separated coordinates");
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) fail(ErrorKind::MalformedInput, "point has all coordinates zero");
  return ProjectivePoint(v[0], v[1], v[2]);
}

inline Json to_json(const Matrix3& m) {
  Json rows = Json::array();
  for (const auto& row : m.m) rows.push_back({to_fraction_string(row[0]), to_fraction_string(row[1]), to_fraction_string(row[2])});
  return rows;
}

inline Json to_json(const WeierstrassData& w) {
  return {{"alpha", to_fraction_string(w.alpha)}, {"beta", to_fraction_string(w.beta)}, {"transform", to_json(w.transform)}};
}

inline Json to_json(const SingularityNode& n) {
  Json j = {{"multiplicity", std::to_string(n.multiplicity)}};
  if (n.step.kind == ChartStep::Kind::Slope)
    j["direction"] = to_fraction_string(n.step.slope);
  else
    j["direction"] = "vertical";
  Json children = Json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  j["children"] = children;
  return j;
}

inline Json to_json(const SingularityProfile& p) {
  Json mults = Json::array();
  for (int m : p.multiplicities()) mults.push_back(std::to_string(m));
  Json tree = to_json(p.root);
  tree.erase("direction");
  return {{"point", to_json(p.location)}, {"multiplicities", mults}, {"delta", std::to_string(p.delta())}, {"tree", tree}};
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::MalformedInput, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::MalformedInput, path.string() + ": " + e.what());
  }
}

struct TorsionClaim {
  ProjectivePoint point;
  int order = 0;
};

/// Curve document: a form plus optional metadata whose claims are checked
/// when the file is loaded.
struct CurveFile {
  std::string name;
  HomogeneousForm form;
  std::vector<ProjectivePoint> flexes;
  std::optional<ProjectivePoint> origin;  // flex used as group origin
  std::vector<TorsionClaim> torsion;
};

/// Re-verifies flexes and claimed torsion orders; throws MalformedInput on
/// the first false claim.
inline void verify_claims(const CurveFile& c) {
  for (const auto& p : c.flexes)
    if (!is_flex(c.form, p)) fail(ErrorKind::MalformedInput, c.name + ": claimed flex " + p.to_string() + " is not a flex");
  if (c.torsion.empty()) return;
  if (!c.origin) fail(ErrorKind::MalformedInput, c.name + ": torsion claims need an \"origin\" flex");
  if (!is_flex(c.form, *c.origin)) fail(ErrorKind::MalformedInput, c.name + ": origin is not a flex");
  const WeierstrassData w = weierstrass_at_flex(c.form, *c.origin);
  for (const auto& t : c.torsion) {
    if (c.form(t.point) != 0) fail(ErrorKind::MalformedInput, c.name + ": torsion point is not on the curve");
    const auto ord = point_order(w, to_ec_point(w, t.point), t.order);
    if (!ord || *ord != t.order)
      fail(ErrorKind::MalformedInput, c.name + ": point " + t.point.to_string() + " does not have order " + std::to_string(t.order));
  }
}

inline CurveFile curve_from_json(const Json& j) {
  CurveFile c;
  if (!j.is_object()) fail(ErrorKind::MalformedInput, "curve file must be a JSON object");
  c.name = j.value("name", std::string("curve"));
  c.form = form_from_json(j.contains("form") ? j["form"] : j);
  if (j.contains("flexes"))
    for (const auto& p : j["flexes"]) c.flexes.push_back(point_from_json(p));
  if (j.contains("origin")) c.origin = point_from_json(j["origin"]);
  if (j.contains("torsion"))
    for (const auto& t : j["torsion"]) {
      if (!t.is_object() || !t.contains("point") || !t.contains("order"))
        fail(ErrorKind::MalformedInput, "torsion entries need \"point\" and \"order\"");
      c.torsion.push_back({point_from_json(t["point"]), int_from_json(t["order"], "order")});
    }
  verify_claims(c);
  return c;
}

inline CurveFile load_curve(const std::filesystem::path& path) { return curve_from_json(read_json_file(path)); }

struct FamilyFile {
  std::string name;
  CurveFamily family;
  Rational t0;
  ProjectivePoint point{0, 0, 1};
};

/// {"degree": d, "coeffs": [[a, b, c, ["c0", "c1", ...]], ...], "t0": "0",
/// "point": [x, y, z]} with coefficient polynomials in t, low to high.
inline FamilyFile family_from_json(const Json& j) {
  FamilyFile f;
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs") || !j.contains("point"))
    fail(ErrorKind::MalformedInput, "family needs \"degree\", \"coeffs\" and \"point\"");
  f.name = j.value("name", std::string("family"));
  f.family.degree = int_from_json(j["degree"], "degree");
  for (const auto& t : j["coeffs"]) {
    if (!t.is_array() || t.size() != 4 || !t[3].is_array())
      fail(ErrorKind::MalformedInput, "family coefficients are [a, b, c, [\"c0\", \"c1\", ...]]");
    const Exponent e{int_from_json(t[0], "exponent"), int_from_json(t[1], "exponent"), int_from_json(t[2], "exponent")};
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != f.family.degree)
      fail(ErrorKind::MalformedInput, "exponent triple does not sum to the degree");
    std::vector<Rational> c;
    for (const auto& x : t[3]) c.push_back(rational_from_json(x));
    auto [it, inserted] = f.family.coeffs.emplace(e, UPoly(std::move(c)));
    if (!inserted) fail(ErrorKind::MalformedInput, "repeated exponent in family");
  }
  f.t0 = j.contains("t0") ? rational_from_json(j["t0"]) : Rational(0);
  f.point = point_from_json(j["point"]);
  return f;
}

inline FamilyFile load_family(const std::filesystem::path& path) { return family_from_json(read_json_file(path)); }

}  // namespace ratcurves
