// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ratcurves/cubic.hpp"
#include "ratcurves/io.hpp"
#include "ratcurves/kontsevich.hpp"
#include "ratcurves/pencils.hpp"
#include "ratcurves/selftest.hpp"
#include "ratcurves/singular.hpp"
#include "ratcurves/torsion.hpp"

namespace ratcurves::cli {

inline std::string num(long v) { return std::to_string(v); }

inline Json kind_json(MemberKind k) { return to_string(k); }

inline Json member_json(const SingularMember& m) {
  Json j;
  if (m.rational) {
    j["parameter"] = {to_fraction_string(m.s1), to_fraction_string(m.s2)};
  } else {
    j["conjugates"] = m.conjugates.to_string("s");
  }
  j["count"] = num(m.count);
  j["multiplicity"] = num(m.multiplicity);
  j["kind"] = kind_json(m.kind);
  return j;
}

inline Json report_json(const SingularMemberReport& r) {
  Json members = Json::array();
  for (const auto& m : r.members) members.push_back(member_json(m));
  return {{"degree", num(r.discriminant.degree)},
          {"members", members},
          {"distinct", num(r.distinct())},
          {"total_multiplicity", num(r.total_multiplicity())}};
}

inline ProjectivePoint first_rational_flex(const HomogeneousForm& c) {
  const auto fl = flexes(c);
  require(!fl.rational_flexes.empty(), ErrorKind::UnsupportedField, "curve has no rational flex");
  return fl.rational_flexes.front();
}

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error, 2 malformed input or usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumerative geometry of plane curves", "ratcurves"};
  app.require_subcommand(1);
  Json result;

  auto* nk = app.add_subcommand("nk", "Numbers of rational plane curves through 3k-1 points");
  long nk_max = 4;
  std::string nk_cache = "./nk-cache.json";
  bool nk_no_cache = false;
  nk->add_option("--max", nk_max, "largest degree")->check(CLI::PositiveNumber);
  nk->add_option("--cache", nk_cache, "cache file");
  nk->add_flag("--no-cache", nk_no_cache, "do not read or write the cache");

  auto* tor = app.add_subcommand("torsion", "Contact classes of level k on a smooth cubic");
  long tor_k = 1;
  bool tor_enum = false;
  tor->add_option("--k", tor_k, "level")->required();
  tor->add_flag("--enumerate", tor_enum, "list every class");

  std::string curve_path, point_text, f_path, g_path, family_path;
  bool assume_irreducible = false;
  auto* flx = app.add_subcommand("flexes", "Flexes of a smooth cubic");
  flx->add_option("--curve", curve_path, "curve file")->required();

  auto* jinv = app.add_subcommand("jinv", "Weierstrass data and j-invariant at a rational flex");
  jinv->add_option("--curve", curve_path, "curve file")->required();
  jinv->add_option("--point", point_text, "flex x,y,z (default: first rational flex)");

  auto* gen = app.add_subcommand("genus", "Geometric genus from resolution trees");
  gen->add_option("--curve", curve_path, "curve file")->required();
  gen->add_flag("--assume-irreducible", assume_irreducible, "skip the irreducibility certificate");

  auto* res = app.add_subcommand("resolve", "Resolution tree at a point");
  res->add_option("--curve", curve_path, "curve file")->required();
  res->add_option("--point", point_text, "point x,y,z")->required();

  auto* isec = app.add_subcommand("intersect", "Intersection of two curves");
  isec->add_option("--f", f_path, "first curve file")->required();
  isec->add_option("--g", g_path, "second curve file")->required();

  auto* pdisc = app.add_subcommand("pencil-disc", "Singular members of the contact pencil at a point");
  pdisc->add_option("--cubic", curve_path, "smooth cubic file")->required();
  pdisc->add_option("--point", point_text, "contact point x,y,z")->required();

  auto* uni = app.add_subcommand("unisecant", "Count of rational unisecant curves");
  int uni_k = 3;
  uni->add_option("--cubic", curve_path, "smooth cubic file")->required();
  uni->add_option("--k", uni_k, "degree (only 3 is supported)");

  auto* bnd = app.add_subcommand("bounds", "Genus bounds and the moving-contact inequality");
  long deg_c = 3, deg_a = 1;
  std::optional<long> a_sq, sum_mu, a_dot_c;
  bnd->add_option("--deg-c", deg_c, "degree of the fixed curve");
  bnd->add_option("--deg-a", deg_a, "degree of the moving curves");
  bnd->add_option("--a-sq", a_sq, "self-intersection A^2");
  bnd->add_option("--sum-mu", sum_mu, "sum of mu(mu-1)");
  bnd->add_option("--a-dot-c", a_dot_c, "intersection A.C");

  auto* fam = app.add_subcommand("check-family", "Derivative weak-type check on a one-parameter family");
  int samples = 5;
  fam->add_option("--family", family_path, "family file")->required();
  fam->add_option("--samples", samples, "parameters sampled for equisingularity")->check(CLI::NonNegativeNumber);

  auto* st = app.add_subcommand("selftest", "Randomized property checks");
  unsigned long seed = 20240601;
  st->add_option("--seed", seed, "random seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (nk->parsed()) {
      const NkTable t = nk_no_cache ? nk_table(nk_max) : nk_table(nk_max, std::filesystem::path(nk_cache));
      Json entries = Json::array();
      for (const auto& [k, n] : t.entries) entries.push_back({num(k), n.get_str()});
      result["entries"] = entries;
    } else if (tor->parsed()) {
      Json by_level = Json::object();
      for (const auto& [d, c] : level_histogram(tor_k)) by_level[num(d)] = num(c);
      result["k"] = num(tor_k);
      result["total"] = num(contact_count(tor_k));
      result["primitive"] = num(primitive_contact_count(tor_k));
      result["by_level"] = by_level;
      if (tor_enum) {
        Json classes = Json::array();
        for (const auto& [c, lvl] : enumerate_contact_classes(tor_k)) classes.push_back({num(c.n), num(c.m), num(lvl)});
        result["classes"] = classes;
      }
    } else if (flx->parsed()) {
      const CurveFile c = load_curve(curve_path);
      const FlexData fd = flexes(c.form);
      Json pts = Json::array();
      for (const auto& p : fd.rational_flexes) pts.push_back(to_json(p));
      result["count"] = num(fd.count_with_multiplicity);
      result["distinct"] = num(fd.distinct);
      result["eliminant_squarefree"] = fd.eliminant_squarefree;
      result["hessian"] = to_json(hessian(c.form));
      result["rational_flexes"] = pts;
    } else if (jinv->parsed()) {
      const CurveFile c = load_curve(curve_path);
      const ProjectivePoint p = point_text.empty() ? first_rational_flex(c.form) : parse_point(point_text);
      const WeierstrassData w = weierstrass_at_flex(c.form, p);
      result = to_json(w);
      result["flex"] = to_json(p);
      result["j"] = to_fraction_string(j_invariant(w));
    } else if (gen->parsed()) {
      const CurveFile c = load_curve(curve_path);
      const GenusReport g = geometric_genus(c.form, assume_irreducible);
      Json profiles = Json::array();
      for (const auto& p : g.profiles) profiles.push_back(to_json(p));
      result["genus"] = num(g.genus);
      result["virtual_genus"] = num(g.virtual_genus);
      result["profiles"] = profiles;
      result["delta"] = num(g.delta);
    } else if (res->parsed()) {
      const CurveFile c = load_curve(curve_path);
      const ProjectivePoint p = parse_point(point_text);
      result = to_json(multiplicity_sequence(c.form, p));
    } else if (isec->parsed()) {
      const CurveFile f = load_curve(f_path), g = load_curve(g_path);
      const IntersectionSummary s = intersect(f.form, g.form);
      Json pts = Json::array();
      for (const auto& [p, m] : s.rational_points)
        pts.push_back({{"point", to_json(p)}, {"multiplicity", num(local_intersection(f.form, g.form, p))}});
      result["bezout"] = num(s.bezout);
      result["points"] = pts;
      result["irrational_degree"] = num(s.irrational_degree);
      try {
        const BlowupIdentity id = blowup_intersection_identity(f.form, g.form);
        result["identity"] = {{"lhs", num(id.lhs)},
                              {"rhs", num(id.rhs)},
                              {"transform", num(id.transform_term)},
                              {"mu_delta", num(id.mu_delta)}};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedField) throw;
        result["identity"] = nullptr;
      }
    } else if (pdisc->parsed()) {
      const CurveFile c = load_curve(curve_path);
      const ProjectivePoint p = parse_point(point_text);
      require(is_smooth_cubic(c.form), ErrorKind::Precondition, "pencil needs a smooth cubic");
      const bool at_flex = is_flex(c.form, p);
      const Pencil pen = at_flex ? flex_pencil(c.form, p) : contact_pencil(c.form, p);
      const MemberParameter at = member_singular_at(pen, p);
      result["pencil"] = at_flex ? "flex" : "contact";
      result["first"] = to_json(pen.first);
      result.update(report_json(singular_members(pen)));
      result["singular_at_point"] = {to_fraction_string(at.s1), to_fraction_string(at.s2)};
    } else if (uni->parsed()) {
      require(uni_k == 3, ErrorKind::Domain, "only k = 3 is supported");
      const CurveFile c = load_curve(curve_path);
      const UnisecantCount u = unisecant_count_k3(c.form);
      result["j"] = to_fraction_string(u.j);
      result["flex_pencil"] = num(u.flex_pencil);
      result["total"] = num(u.total);
    } else if (bnd->parsed()) {
      result["genus_bound"] = to_fraction_string(genus_bound(deg_c, deg_a));
      result["canonical_bound"] = to_fraction_string(canonical_genus_bound(deg_a));
      if (a_sq || sum_mu || a_dot_c) {
        require(a_sq && sum_mu && a_dot_c, ErrorKind::MalformedInput, "--a-sq, --sum-mu and --a-dot-c go together");
        result["certificate"] = moving_contact_certificate(*a_sq, *sum_mu, *a_dot_c);
      }
    } else if (fam->parsed()) {
      const FamilyFile f = load_family(family_path);
      const SingularityProfile prof = multiplicity_sequence(f.family.at(f.t0), f.point);
      result["name"] = f.name;
      result["profile"] = to_json(prof);
      result["result"] = family_derivative_check(f.family, f.t0, f.point, samples);
    } else if (st->parsed()) {
      Json checks = Json::array();
      bool all = true;
      for (const auto& r : run_selftest(seed)) {
        checks.push_back({{"name", r.name}, {"cases", num(r.cases)}, {"passed", r.passed}});
        all = all && r.passed;
      }
      result["seed"] = std::to_string(seed);
      result["checks"] = checks;
      result["passed"] = all;
      out << result.dump(2) << "\n";
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::MalformedInput ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << result.dump(2) << "\n";
  return 0;
}

}  // namespace ratcurves::cli
