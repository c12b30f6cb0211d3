#include "hopfinv/report.hpp"

#include <algorithm>

namespace hopfinv {

namespace {

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json mat_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

std::string label(const FiniteAlgebra& a, std::size_t i) { return a.labels()[i]; }

struct Context {
  const ComoduleAlgebra& c;
  ReportDocument& doc;
  bool reduced;
  Subspace inv;
  std::vector<PointData> points;

  void alarm(const std::string& s) { doc.alarms.push_back(s); }
  void note(const std::string& s) { doc.notes.push_back(s); }
};

Json section_validate(Context& x) {
  const auto rep = validate_comodule(x.c);
  return {{"ok", rep.ok}, {"violations", rep.violations}};
}

Json section_invariants(Context& x) {
  if (!is_subalgebra(x.c.algebra(), x.inv)) x.alarm("invariants are not a subalgebra");
  return {{"dim", x.inv.dim()}, {"basis", subspace_json(x.c.algebra(), x.inv)}};
}

Json section_radical(Context& x) {
  const Subspace r = h_radical(x.c);
  return {{"h_radical", subspace_json(x.c.algebra(), r)}, {"h_reduced", x.reduced}};
}

Json section_simple(Context& x) { return {{"h_simple", is_h_simple(x.c)}}; }

Json section_charpoly(Context& x) {
  const FiniteAlgebra& a = x.c.algebra();
  Json out = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto r = invariance_check(x.c, a.basis(i), x.reduced);
    if (r.alarm) x.alarm("H-reduced but the charpoly of " + label(a, i) + " has a non-invariant coefficient");
    else if (!r.charpoly.all_invariant())
      x.note("charpoly of " + label(a, i) + " has a non-invariant coefficient" +
             (x.c.field().is_rational() ? " in characteristic 0" : ""));
    const auto w = integrality_witness(x.c, a.basis(i));
    if (!w.found && (x.reduced || !x.c.field().is_rational()))
      x.alarm("no integrality witness for " + label(a, i) + ": " + w.reason);
    const auto n = norm_of_coaction(x.c, a.basis(i));
    if (!n.consistent()) x.alarm("norm invertibility inconsistent for " + label(a, i));
    Json e = charpoly_json(x.c, r.charpoly);
    e["element"] = label(a, i);
    e["norm"] = a.format(n.norm);
    e["witness"] = w.found ? Json(w.method) : Json(nullptr);
    if (r.charpoly.all_invariant()) {
      const auto o = openness_ideal_check(x.c, a.basis(i));
      if (!o.verified) x.alarm("openness identity fails for " + label(a, i));
      e["openness_verified"] = o.verified;
    }
    out.push_back(std::move(e));
  }
  return out;
}

Json section_spectrum(Context& x) {
  Json out = Json::array();
  for (const auto& p : x.points) out.push_back(point_json(x.c.algebra(), p));
  return out;
}

Json section_orbit(Context& x) {
  const std::size_t n = x.c.hopf_dim();
  Json out = Json::array();
  for (std::size_t k = 0; k < x.points.size(); ++k) {
    const auto o = orbital(x.c, x.points[k]);
    const std::string at = " at point " + std::to_string(k);
    if (!o.is_subalgebra || !o.is_right_coideal) x.alarm("orbital is not a right coideal subalgebra" + at);
    if (n % o.dim_over_kp != 0) x.alarm("orbital dimension does not divide dim H" + at);
    Json e = orbital_json(o);
    Json reps = Json::array();
    for (const auto& r : o.lifted_reps) reps.push_back(x.c.algebra().format(r));
    e["lifted_reps"] = reps;
    out.push_back(std::move(e));
  }
  return out;
}

Json section_stabilizer(Context& x) {
  Json out = Json::array();
  for (std::size_t k = 0; k < x.points.size(); ++k) {
    const auto o = orbital(x.c, x.points[k]);
    const auto s = stabilizer(x.c, o);
    const std::string at = " at point " + std::to_string(k);
    if (!s.is_subalgebra || !s.is_left_coideal) x.alarm("stabilizer is not a left coideal subalgebra" + at);
    if (o.dim_over_kp * s.dim_over_kp != x.c.hopf_dim()) x.alarm("dim O(p) dim St(p) != dim H" + at);
    out.push_back(stabilizer_json(s));
  }
  return out;
}

Json section_fiber(Context& x) {
  Json out = Json::array();
  for (const auto& q : invariant_contractions(x.c)) {
    const auto f = fiber(x.c, q);
    const bool same = f == brute_fiber(x.c, q);
    if (!same) x.alarm("fiber differs from the enumerated fiber");
    out.push_back({{"q", subspace_json(x.c.algebra(), q)}, {"size", f.size()}, {"matches_enumeration", same}});
  }
  return out;
}

Json section_galois(Context& x) {
  const auto g = is_galois(x.c);
  if (!g.agree()) x.alarm("Galois criteria disagree");
  return galois_json(g);
}

Json section_integral(Context& x) {
  const auto is = integral_space(x.c);
  if (is.alarm()) x.alarm("every stabilizer is semisimple but there is no total integral");
  if (!is.value_ideal_is_ideal) x.alarm("integral values do not form an ideal of the invariants");
  for (std::size_t k = 0; k < is.stabilizer_semisimple.size(); ++k) {
    if (is.stabilizer_semisimple[k] && !is.integral_outside_point[k])
      x.alarm("semisimple stabilizer without an integral outside point " + std::to_string(k));
    if (!is.stabilizer_semisimple[k] && is.integral_outside_point[k])
      x.note("integral outside point " + std::to_string(k) + " with a non-semisimple stabilizer");
  }
  if (is.has_total) {
    const HopfModule m = regular_module(x.c);
    for (std::size_t i = 0; i < x.c.dim(); ++i) {
      const Vec t = doi_trace(x.c, *is.total, m, x.c.algebra().basis(i));
      if (!x.inv.contains(t) || doi_trace(x.c, *is.total, m, t) != t) x.alarm("trace is not a retraction onto A^H");
    }
  }
  return integral_json(x.c, is);
}

Json section_freebasis(Context& x) {
  if (!x.reduced) return {{"skipped", "A is not H-reduced"}};
  const auto r = free_basis_over_invariants(x.c);
  if (!r.ok()) x.alarm("free basis certificate failed");
  const HopfModule m = regular_module(x.c);
  for (const auto& mod : {m, direct_sum(m, m)})
    if (!hopf_module_equivalence_check(x.c, mod).ok()) x.alarm("Hopf module equivalence fails");
  for (std::size_t k = 0; k < x.points.size(); ++k)
    if (!orbit_residue_iso_check(x.c, x.points[k]).ok())
      x.alarm("orbital and fiber algebra disagree at point " + std::to_string(k));
  return free_basis_json(x.c, r);
}

Json section_corr(Context& x) {
  if (!x.reduced) return {{"skipped", "A is not H-reduced"}};
  const auto r = ideal_correspondence_check(x.c);
  if (!r.ok()) x.alarm("ideal correspondence fails");
  return correspondence_json(r);
}

Json section_reductivity(Context& x) {
  const auto family = costable_family(x.c);
  const auto cert = weak_reductivity_certificate(x.c);
  const auto wr = weak_reductivity_check(x.c, family);
  const auto rd = residue_degree_check(x.c);
  if (cert.which != 0 && !wr.ok()) x.alarm("certified weakly reductive but a quotient has unlifted invariants");
  if (cert.which != 0 && !rd.ok()) x.alarm("residue degree bound fails");
  bool power_ok = true;
  if (has_invariant_charpolys(x.c))
    for (const auto& i : family) {
      if (i.is_whole()) continue;
      const auto q = quotient_comodule(x.c, i);
      const Subspace qinv = invariants(q.comodule);
      for (const auto& v : qinv.basis()) power_ok = power_ok && power_image_check(x.c, i, v).ok();
    }
  if (!power_ok) x.alarm("binomial powers of a quotient invariant do not lift");
  Json deg = Json::array();
  for (const auto& e : rd.points)
    deg.push_back({{"degree_p", e.degree_p}, {"degree_q", e.degree_q}, {"orbit_dim", e.orbit_dim}, {"ok", e.ok}});
  return {{"certificate", cert.which ? std::string(1, cert.which) : std::string("none")},
          {"certificate_text", cert.text},
          {"family_size", family.size()},
          {"surjective_on_family", wr.ok()},
          {"power_images_lift", power_ok},
          {"residue_degrees", deg}};
}

}  // namespace

const std::vector<std::string>& report_sections() {
  static const std::vector<std::string> names{"validate", "invariants", "radical",  "simple",    "charpoly",
                                              "spectrum", "orbit",      "stabilizer", "fiber",   "galois",
                                              "integral", "freebasis",  "corr-check", "reductivity"};
  return names;
}

Json subspace_json(const FiniteAlgebra& a, const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis()) out.push_back(a.format(v));
  return out;
}

Json point_json(const FiniteAlgebra& a, const PointData& p) {
  return {{"ideal", subspace_json(a, p.ideal)}, {"degree", p.degree()}, {"modulus", p.modulus.to_string()}};
}

Json charpoly_json(const ComoduleAlgebra& c, const CoactionCharPoly& cp) {
  Json coeffs = Json::array();
  for (const auto& ci : cp.coeffs) coeffs.push_back(c.algebra().format(ci));
  return {{"coeffs", coeffs}, {"invariant", cp.invariant_flags}, {"all_invariant", cp.all_invariant()}};
}

Json orbital_json(const OrbitalData& o) {
  return {{"dim_over_kp", o.dim_over_kp},
          {"dim", o.space.dim()},
          {"basis", subspace_json(o.eh, o.space)},
          {"subalgebra", o.is_subalgebra},
          {"right_coideal", o.is_right_coideal}};
}

Json stabilizer_json(const StabilizerData& s) {
  return {{"dim_over_kp", s.dim_over_kp},
          {"basis", subspace_json(s.ehstar, s.space)},
          {"subalgebra", s.is_subalgebra},
          {"left_coideal", s.is_left_coideal},
          {"semisimple", s.is_semisimple}};
}

Json galois_json(const GaloisReport& g) {
  return {{"galois", g.galois()},
          {"gamma_rank", g.gamma_rank},
          {"gamma_criterion", g.gamma_criterion},
          {"pointwise_criterion", g.pointwise_criterion},
          {"orbit_dims", g.orbit_dims},
          {"agree", g.agree()}};
}

Json integral_json(const ComoduleAlgebra& c, const IntegralSpace& is) {
  Json out = {{"dim", is.basis.size()},
              {"value_ideal", subspace_json(c.algebra(), is.value_ideal)},
              {"has_total", is.has_total},
              {"stabilizer_semisimple", is.stabilizer_semisimple},
              {"integral_outside_point", is.integral_outside_point}};
  out["total"] = is.total ? mat_json(*is.total) : Json(nullptr);
  return out;
}

Json free_basis_json(const ComoduleAlgebra& c, const FreeBasisReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    Json basis = Json::array();
    for (const auto& b : f.basis) basis.push_back(c.algebra().format(b));
    factors.push_back({{"idempotent", c.algebra().format(f.idempotent)},
                       {"basis", basis},
                       {"rank", f.basis.size()},
                       {"orbit_dim", f.orbit_dim},
                       {"unique_representation", f.unique_representation}});
  }
  return {{"factors", factors}, {"ok", r.ok()}};
}

Json correspondence_json(const CorrespondenceReport& r) {
  return {{"costable_ideals", r.costable_count},
          {"invariant_ideals", r.invariant_ideal_count},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

ReportDocument run_report(const ComoduleAlgebra& c, const std::vector<std::string>& sections) {
  for (const auto& s : sections)
    if (std::find(report_sections().begin(), report_sections().end(), s) == report_sections().end())
      throw Error("unknown report section '" + s + "'");
  ReportDocument doc;
  Context x{c, doc, is_h_reduced(c), invariants(c), maximal_ideals(c.algebra())};
  auto wanted = [&](const std::string& s) {
    return sections.empty() || std::find(sections.begin(), sections.end(), s) != sections.end();
  };
  using Fn = Json (*)(Context&);
  const std::vector<std::pair<std::string, Fn>> table{
      {"validate", section_validate},     {"invariants", section_invariants}, {"radical", section_radical},
      {"simple", section_simple},         {"charpoly", section_charpoly},     {"spectrum", section_spectrum},
      {"orbit", section_orbit},           {"stabilizer", section_stabilizer}, {"fiber", section_fiber},
      {"galois", section_galois},         {"integral", section_integral},     {"freebasis", section_freebasis},
      {"corr-check", section_corr},       {"reductivity", section_reductivity}};
  doc.json["digest"] = instance_digest(c);
  doc.json["field"] = c.field().name();
  doc.json["dim_a"] = c.dim();
  doc.json["dim_h"] = c.hopf_dim();
  for (const auto& [name, fn] : table)
    if (wanted(name)) doc.json[name] = fn(x);
  doc.json["alarms"] = doc.alarms;
  doc.json["notes"] = doc.notes;
  return doc;
}

}  // namespace hopfinv
