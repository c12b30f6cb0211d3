#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hopfinv/fixtures.hpp"
#include "hopfinv/fuzz.hpp"
#include "support.hpp"

using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<NamedComodule> fixtures() { return fixture_corpus(); }

const NamedComodule& fixture(const std::vector<NamedComodule>& all, const std::string& name) {
  for (const auto& f : all)
    if (f.name == name) return f;
  throw std::runtime_error("missing fixture " + name);
}

FuzzOptions fuzz_options(std::uint64_t seed, std::size_t count) {
  FuzzOptions o;
  o.seed = seed;
  o.count = count;
  o.field = "mixed";
  o.max_dim = 6;
  o.max_tensor = 24;
  return o;
}

/// Every element of A over a prime field.
std::vector<Vec> all_elements(const FiniteAlgebra& a) {
  const std::uint64_t p = a.field().characteristic();
  std::vector<Vec> out{a.zero()};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (std::uint64_t c = 0; c < p; ++c) {
        Vec w = v;
        w[i] = Scalar::from_int(a.field(), static_cast<long long>(c));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

Vec eval(const FiniteAlgebra& a, const std::vector<Vec>& coeffs, const Vec& x) {
  Vec acc = a.zero(), pw = a.unit();
  for (const auto& c : coeffs) {
    acc = acc + a.mul(c, pw);
    pw = a.mul(pw, x);
  }
  return acc;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome axiom_suites() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, HopfAlgebra>> hs;
  for (std::uint64_t p : {0, 2, 3, 5}) {
    const Field f = p ? F(p) : Q();
    for (const auto& g : small_groups()) {
      hs.emplace_back("group algebra of order " + std::to_string(g.order()) + " over " + f.name(),
                      build_group_algebra(f, g));
      hs.emplace_back("dual group algebra of order " + std::to_string(g.order()) + " over " + f.name(),
                      build_dual_group_algebra(f, g));
    }
  }
  hs.emplace_back("Sweedler over Q", build_sweedler(Q()));
  hs.emplace_back("Sweedler over F_3", build_sweedler(F(3)));
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t c = 0; c < p; ++c)
      for (bool dual : {false, true})
        hs.emplace_back("u(L) over F_" + std::to_string(p), build_restricted_env(one_dim_plie(F(p), S(F(p), (int)c)), dual));
  for (const auto& [name, h] : hs) o.require(validate_hopf(h).ok, name + " fails validate_hopf");
  for (const auto& [name, c] : fixtures()) o.require(validate_comodule(c).ok, name + " fails validate_comodule");
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(hs.size()) + " Hopf algebras, " + std::to_string(fixtures().size()) + " fixtures";
  return o;
}

Outcome charpoly_correctness(const std::vector<FuzzInstance>& fuzz200) {
  Outcome o;
  std::vector<NamedComodule> all = fixtures();
  for (const auto& f : fuzz200) all.push_back({f.generator, f.comodule});
  std::size_t checked = 0;
  for (const auto& [name, c] : all) {
    if (c.dim() * c.hopf_dim() > 24) continue;
    for (std::size_t i = 0; i < c.dim(); ++i) {
      const Vec a = c.algebra().basis(i);
      const auto cp = coaction_charpoly(c, a);
      o.require(cp.coeffs == leibniz_charpoly(c.algebra(), coaction_matrix(c, a)), name + ": differs from Leibniz");
      o.require(is_zero(eval(c.algebra(), cp.coeffs, a)), name + ": charpoly does not annihilate");
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " elements over " + std::to_string(all.size()) + " instances";
  return o;
}

Outcome invariance_suite(const std::filesystem::path& alarm_dir) {
  Outcome o;
  std::vector<NamedComodule> reduced;
  for (auto& f : fixtures())
    if (is_h_reduced(f.comodule)) reduced.push_back(f);
  const std::size_t from_fixtures = reduced.size();
  std::size_t fuzzed = 0;
  std::map<std::string, std::size_t> per_field;
  FuzzOptions opt = fuzz_options(7, 0);
  for (std::size_t i = 0; fuzzed < 600 && i < 4000; ++i) {
    auto inst = fuzz_instance(opt, i);
    if (!is_h_reduced(inst.comodule)) continue;
    ++per_field[inst.comodule.field().name()];
    reduced.push_back({inst.generator, std::move(inst.comodule)});
    ++fuzzed;
  }
  std::mt19937_64 rng(11);
  std::size_t alarms = 0;
  for (const auto& [name, c] : reduced) {
    std::vector<Vec> probes;
    for (std::size_t i = 0; i < c.dim(); ++i) probes.push_back(c.algebra().basis(i));
    probes.push_back(random_vec(c.field(), c.dim(), rng));
    bool ok = true;
    for (const auto& v : probes) ok = ok && !invariance_check(c, v, true).alarm;
    if (!ok) {
      ++alarms;
      std::filesystem::create_directories(alarm_dir);
      std::ofstream(alarm_dir / ("alarm-" + instance_digest(c) + ".json")) << canonical_text(c);
    }
  }
  o.require(alarms == 0, std::to_string(alarms) + " alarms, serialized to " + alarm_dir.string());
  o.require(fuzzed >= 500, "only " + std::to_string(fuzzed) + " H-reduced fuzzed instances");
  for (const char* f : {"F_2", "F_3", "Q"}) o.require(per_field[f] > 0, std::string("no H-reduced instance over ") + f);
  if (o.pass)
    o.detail = std::to_string(from_fixtures) + " fixtures + " + std::to_string(fuzzed) + " fuzzed (F_2 " +
               std::to_string(per_field["F_2"]) + ", F_3 " + std::to_string(per_field["F_3"]) + ", Q " +
               std::to_string(per_field["Q"]) + "), 0 alarms";
  return o;
}

Outcome integrality() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, c] : fixtures()) {
    const Subspace inv = invariants(c);
    std::vector<Vec> elems;
    if (!c.field().is_rational()) elems = all_elements(c.algebra());
    else if (is_h_reduced(c))
      for (std::size_t i = 0; i < c.dim(); ++i) elems.push_back(c.algebra().basis(i));
    for (const auto& a : elems) {
      const auto w = integrality_witness(c, a);
      o.require(w.found, name + ": no witness (" + w.reason + ")");
      if (!w.found) continue;
      o.require(w.coeffs.back() == c.algebra().unit(), name + ": witness not monic");
      o.require(is_zero(eval(c.algebra(), w.coeffs, a)), name + ": witness does not annihilate");
      for (const auto& ci : w.coeffs) o.require(inv.contains(ci), name + ": coefficient outside A^H");
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " elements";
  return o;
}

Outcome fibers(const std::vector<FuzzInstance>& fuzz200) {
  Outcome o;
  std::vector<NamedComodule> all = fixtures();
  for (const auto& f : fuzz200) all.push_back({f.generator, f.comodule});
  std::size_t pairs = 0;
  for (const auto& [name, c] : all)
    for (const auto& q : invariant_contractions(c)) {
      o.require(fiber(c, q) == brute_fiber(c, q), name + ": fiber differs from enumeration");
      ++pairs;
    }
  const auto all_fx = fixtures();
  const auto g2 = fixture(all_fx, "fix_g2").comodule;
  const auto sw = fixture(all_fx, "fix_sw").comodule;
  const auto g2f = fiber(g2, invariant_contractions(g2).front()).size();
  const auto swf = fiber(sw, invariant_contractions(sw).front()).size();
  o.require(g2f == 2, "FIX-G2 fiber has " + std::to_string(g2f) + " points");
  o.require(swf == 1, "FIX-SW fiber has " + std::to_string(swf) + " points");
  if (o.pass) o.detail = std::to_string(pairs) + " (instance, q) pairs; FIX-G2 2 points, FIX-SW 1 point";
  return o;
}

Outcome openness() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, c] : fixtures())
    for (std::size_t i = 0; i < c.dim(); ++i) {
      const Vec a = c.algebra().basis(i);
      o.require(coaction_charpoly(c, a).all_invariant(), name + ": charpoly not invariant");
      if (!o.pass) continue;
      o.require(openness_ideal_check(c, a).verified, name + ": set identity fails");
      ++checked;
    }
  if (o.pass) o.detail = std::to_string(checked) + " basis elements";
  return o;
}

Outcome dimension_identities(const std::vector<FuzzInstance>& fuzz200) {
  Outcome o;
  std::vector<NamedComodule> all = fixtures();
  for (const auto& f : fuzz200) all.push_back({f.generator, f.comodule});
  std::size_t points = 0;
  for (const auto& [name, c] : all)
    for (const auto& p : maximal_ideals(c.algebra())) {
      const auto orb = orbital(c, p);
      const auto st = stabilizer(c, orb);
      o.require(orb.dim_over_kp * st.dim_over_kp == c.hopf_dim(), name + ": dim O dim St != dim H");
      o.require(c.hopf_dim() % orb.dim_over_kp == 0, name + ": dim O does not divide dim H");
      ++points;
    }
  const auto all_fx = fixtures();
  const auto& sw = fixture(all_fx, "fix_sw").comodule;
  const auto p = maximal_ideals(sw.algebra()).front();
  const auto orb = orbital(sw, p);
  const auto st = stabilizer(sw, orb);
  o.require(orb.dim_over_kp == 2 && st.dim_over_kp == 2 && sw.hopf_dim() == 4, "FIX-SW does not give (2, 2, 4)");
  if (o.pass) o.detail = std::to_string(points) + " points; FIX-SW (2, 2, 4)";
  return o;
}

Outcome galois(const std::vector<FuzzInstance>& fuzz200) {
  Outcome o;
  std::vector<NamedComodule> all = fixtures();
  for (const auto& f : fuzz200) all.push_back({f.generator, f.comodule});
  std::size_t galois_count = 0;
  for (const auto& [name, c] : all) {
    const auto g = is_galois(c);
    o.require(g.agree(), name + ": criteria disagree");
    galois_count += g.galois();
  }
  const auto all_fx = fixtures();
  o.require(is_galois(fixture(all_fx, "fix_g2").comodule).galois(), "FIX-G2 not Galois");
  o.require(!is_galois(fixture(all_fx, "fix_sw").comodule).galois(), "FIX-SW Galois");
  if (o.pass)
    o.detail = std::to_string(all.size()) + " instances, " + std::to_string(galois_count) +
               " Galois; FIX-G2 Galois, FIX-SW not";
  return o;
}

Outcome total_integrals() {
  Outcome o;
  std::size_t with_total = 0;
  for (const auto& [name, c] : fixtures()) {
    const auto is = integral_space(c);
    if (!is.all_stabilizers_semisimple()) continue;
    o.require(is.has_total, name + ": semisimple stabilizers but no total integral");
    if (!is.has_total) continue;
    ++with_total;
    const HopfModule a = regular_module(c);
    for (const auto& m : {a, direct_sum(a, a)}) {
      const Subspace mh = invariants(c, m);
      for (std::size_t i = 0; i < m.dim; ++i) {
        const Vec v = unit_vec(c.field(), m.dim, i);
        const Vec t = doi_trace(c, *is.total, m, v);
        o.require(mh.contains(t), name + ": trace leaves M^H");
      }
      for (const auto& v : mh.basis()) o.require(doi_trace(c, *is.total, m, v) == v, name + ": trace moves M^H");
    }
  }
  std::size_t groups = 0;
  for (std::uint64_t p : {2, 3, 5})
    for (const auto& g : small_groups()) {
      const bool expect = g.order() % p != 0;
      o.require(is_geometrically_cosemisimple(build_dual_group_algebra(F(p), g)).cosemisimple == expect,
                "Maschke fails for order " + std::to_string(g.order()) + " over F_" + std::to_string(p));
      o.require(is_geometrically_cosemisimple(build_group_algebra(F(p), g)).cosemisimple,
                "group algebra not cosemisimple");
      ++groups;
    }
  if (o.pass)
    o.detail = std::to_string(with_total) + " fixtures with total integrals and retractions on A, A+A; Maschke on " +
               std::to_string(groups) + " (group, p) pairs via dual group algebras";
  return o;
}

Outcome structure_over_invariants() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& [name, c] : fixtures()) {
    if (!is_h_reduced(c)) continue;
    const auto fb = free_basis_over_invariants(c);
    o.require(fb.ok(), name + ": free basis certificate fails");
    for (const auto& f : fb.factors) o.require(f.basis.size() == f.orbit_dim, name + ": rank differs from dim O(p)");
    const auto corr = ideal_correspondence_check(c);
    o.require(corr.ok(), name + ": " + (corr.failures.empty() ? "" : corr.failures.front()));
    if (name == "fix_trivial")
      o.require(corr.costable_count >= 4 && corr.invariant_ideal_count >= 4, "trivial Q x Q family too small");
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " H-reduced fixtures";
  return o;
}

Outcome reductivity() {
  Outcome o;
  std::size_t lifted = 0;
  for (const auto& [name, c] : fixtures()) {
    const auto cert = weak_reductivity_certificate(c);
    if (c.field().is_rational()) o.require(cert.which == 'a', name + ": certificate is not (a)");
    if (name == "fix_g2f2" || name == "fix_der") o.require(cert.which != 0, name + ": no certificate");
    if (has_invariant_charpolys(c))
      for (const auto& i : costable_family(c)) {
        if (i.is_whole()) continue;
        const auto q = quotient_comodule(c, i);
        const Subspace qinv = invariants(q.comodule);
        for (const auto& v : qinv.basis()) {
          o.require(power_image_check(c, i, v).ok(), name + ": binomial powers do not lift");
          ++lifted;
        }
      }
    if (cert.which != 0) o.require(residue_degree_check(c).ok(), name + ": residue degree bound fails");
  }
  const auto all_fx = fixtures();
  const auto rd = residue_degree_check(fixture(all_fx, "fix_qi").comodule);
  o.require(rd.points.size() == 1 && rd.points[0].degree_p / rd.points[0].degree_q == 2 && rd.points[0].orbit_dim == 2,
            "Q[x]/(x^2+1) grading does not give degree 2 = dim O(p)");
  if (o.pass) o.detail = std::to_string(lifted) + " quotient invariants lifted; certificates as required";
  return o;
}

Outcome determinism(const std::filesystem::path& fixture_dir) {
  Outcome o;
  const FuzzOptions opt = fuzz_options(0, 40);
  const std::string a = run_fuzz(opt).to_json().dump();
  const std::string b = run_fuzz(opt).to_json().dump();
  o.require(a == b, "fuzz summaries differ");
  std::size_t files = 0;
  for (const auto& [name, c] : fixtures()) {
    const auto path = fixture_dir / (name + ".json");
    o.require(std::filesystem::exists(path), "missing " + path.string());
    if (!std::filesystem::exists(path)) continue;
    const std::string text = read_file(path);
    o.require(canonical_text(parse_instance(path.string())) == text, name + ": serialize(parse) differs");
    o.require(canonical_text(c) == text, name + ": file differs from the builder");
    ++files;
  }
  if (o.pass) o.detail = "summary digest " + hex64(fnv1a64(a)) + ", " + std::to_string(files) + " fixture files";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = Clock::now();
  const std::filesystem::path fixture_dir = argc > 1 ? argv[1] : HOPFINV_FIXTURE_DIR;
  const std::filesystem::path alarm_dir = argc > 2 ? argv[2] : "acceptance-alarms";
  const std::vector<FuzzInstance> fuzz200 = fuzz_corpus(fuzz_options(2024, 200));

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom suites", axiom_suites},
      {"charpoly matches the Leibniz oracle", [&] { return charpoly_correctness(fuzz200); }},
      {"H-reduced instances have invariant charpolys", [&] { return invariance_suite(alarm_dir); }},
      {"integrality witnesses", integrality},
      {"fiber equals enumerated fiber", [&] { return fibers(fuzz200); }},
      {"openness set identity", openness},
      {"orbital and stabilizer dimensions", [&] { return dimension_identities(fuzz200); }},
      {"Galois criteria agree", [&] { return galois(fuzz200); }},
      {"total integrals and traces", total_integrals},
      {"free basis and ideal correspondence", structure_over_invariants},
      {"power images and weak reductivity", reductivity},
      {"determinism and round-trip", [&] { return determinism(fixture_dir); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t = Clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (k + 1 == criteria.size()) {
      const double total = seconds_since(t0);
      out.require(total < 60.0, "acceptance run took " + std::to_string(total) + " s");
    }
    failed += !out.pass;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t));
    std::cout << (out.pass ? "PASS" : "FAIL") << " [" << (k + 1 < 10 ? " " : "") << k + 1 << "] " << criteria[k].first
              << " (" << secs << "): " << out.detail << std::endl;
  }
  char total[32];
  std::snprintf(total, sizeof total, "%.2fs", seconds_since(t0));
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in " << total << std::endl;
  return failed ? 1 : 0;
}
