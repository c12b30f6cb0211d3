#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hopfinv/fixtures.hpp"
#include "hopfinv/fuzz.hpp"
#include "hopfinv/report.hpp"

using namespace hopfinv;

namespace {

enum Exit { kOk = 0, kInput = 1, kAlarm = 2, kInternal = 3 };

int emit(const Json& j, int status = kOk) {
  std::cout << j.dump(2) << "\n";
  return status;
}

int emit_report(const ComoduleAlgebra& c, const std::vector<std::string>& sections) {
  const ReportDocument doc = run_report(c, sections);
  return emit(doc.json, doc.status());
}

const PointData& point_at(const std::vector<PointData>& pts, std::size_t k) {
  if (k >= pts.size())
    throw Error("point " + std::to_string(k) + " out of range; the algebra has " + std::to_string(pts.size()) +
                " maximal ideals");
  return pts[k];
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw Error("cannot write '" + p.string() + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite Hopf algebra coactions on finite commutative algebras"};
  app.require_subcommand(1);

  std::string file;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("instance", file, "instance JSON file")->required();
    return sub;
  };

  auto* validate = with_file(app.add_subcommand("validate", "parse and check every axiom"));
  auto* canonical = with_file(app.add_subcommand("canonical", "print the canonical form of an instance"));

  std::vector<std::string> sections;
  auto* report = with_file(app.add_subcommand("report", "run the selected sections (all by default)"));
  report->add_option("--sections", sections, "section names")->delimiter(',');

  auto* inv = with_file(app.add_subcommand("invariants", "basis of A^H"));
  std::string elem;
  auto* charpoly = with_file(app.add_subcommand("charpoly", "characteristic polynomial of delta(a)"));
  charpoly->add_option("--elem", elem, "linear combination of basis labels")->required();
  auto* spectrum = with_file(app.add_subcommand("spectrum", "maximal ideals of A"));
  std::size_t point = 0;
  auto* orbit = with_file(app.add_subcommand("orbit", "orbital subalgebra at a point"));
  orbit->add_option("--point", point, "index into the spectrum")->required();
  auto* stab = with_file(app.add_subcommand("stabilizer", "stabilizer subalgebra at a point"));
  stab->add_option("--point", point, "index into the spectrum")->required();
  std::optional<std::size_t> q;
  auto* fib = with_file(app.add_subcommand("fiber", "maximal ideals over a contraction"));
  fib->add_option("--q", q, "index into the list of contractions (all when omitted)");

  std::vector<std::pair<CLI::App*, std::string>> single;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"galois", "Galois test by both criteria"},
           {"integral", "integrals H -> A and total integrals"},
           {"radical", "H-radical"},
           {"simple", "H-simplicity"},
           {"freebasis", "free basis over the invariants"},
           {"corr-check", "costable ideals versus ideals of A^H"},
           {"reductivity", "weak reductivity certificate and checks"}})
    single.emplace_back(with_file(app.add_subcommand(name, help)), name);

  FuzzOptions fo;
  std::string out_dir, summary_path;
  auto* fuzz = app.add_subcommand("fuzz", "generate instances and run every check");
  fuzz->add_option("--seed", fo.seed, "random seed");
  fuzz->add_option("--count", fo.count, "number of instances");
  fuzz->add_option("--field", fo.field, "F_2, F_3, Q or mixed");
  fuzz->add_option("--max-dim", fo.max_dim, "bound on dim A");
  fuzz->add_option("--max-tensor", fo.max_tensor, "bound on dim A * dim H");
  fuzz->add_option("--out-dir", out_dir, "directory for alarm instances");
  fuzz->add_option("--summary", summary_path, "write the summary here instead of stdout");

  auto* fixtures = app.add_subcommand("fixtures", "write the bundled fixtures as instance files");
  fixtures->add_option("--out-dir", out_dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*fuzz) {
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      const FuzzSummary s = run_fuzz(fo, [&](const FuzzInstance& inst, const FuzzEntry& e) {
        if (!out_dir.empty()) write_file(std::filesystem::path(out_dir) / ("alarm-" + e.digest + ".json"),
                                         canonical_text(inst.comodule));
      });
      const std::string text = s.to_json().dump(2) + "\n";
      if (summary_path.empty()) std::cout << text;
      else write_file(summary_path, text);
      return s.alarm_count() ? kAlarm : kOk;
    }
    if (*fixtures) {
      std::filesystem::create_directories(out_dir);
      for (const auto& [name, c] : fixture_corpus())
        write_file(std::filesystem::path(out_dir) / (name + ".json"), canonical_text(c));
      return kOk;
    }

    const ComoduleAlgebra c = [&] {
      try {
        return parse_instance(file);
      } catch (const Error& e) {
        if (*validate) std::cout << Json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
        throw;
      }
    }();
    const FiniteAlgebra& a = c.algebra();

    if (*validate)
      return emit({{"ok", true}, {"field", c.field().name()}, {"dim_a", c.dim()}, {"dim_h", c.hopf_dim()},
                   {"digest", instance_digest(c)}});
    if (*canonical) {
      std::cout << canonical_text(c);
      return kOk;
    }
    if (*report) return emit_report(c, sections);
    if (*inv) return emit_report(c, {"invariants"});
    if (*spectrum) return emit_report(c, {"spectrum"});
    if (*charpoly) {
      const Vec v = a.parse(elem);
      const auto r = invariance_check(c, v);
      const auto w = integrality_witness(c, v);
      Json j = charpoly_json(c, r.charpoly);
      j["element"] = a.format(v);
      j["h_reduced"] = r.h_reduced;
      j["norm"] = a.format(norm_of_coaction(c, v).norm);
      Json wc = Json::array();
      for (const auto& x : w.coeffs) wc.push_back(a.format(x));
      j["witness"] = {{"found", w.found}, {"method", w.method}, {"coeffs", wc}, {"reason", w.reason}};
      if (r.alarm) j["alarm"] = "H-reduced but a coefficient is not invariant";
      return emit(j, r.alarm ? kAlarm : kOk);
    }
    if (*orbit || *stab) {
      const auto pts = maximal_ideals(a);
      const OrbitalData o = orbital(c, point_at(pts, point));
      if (*orbit) {
        Json j = orbital_json(o);
        Json reps = Json::array();
        for (const auto& r : o.lifted_reps) reps.push_back(a.format(r));
        j["lifted_reps"] = reps;
        j["point"] = point_json(a, o.point());
        return emit(j);
      }
      Json j = stabilizer_json(stabilizer(c, o));
      j["point"] = point_json(a, o.point());
      return emit(j);
    }
    if (*fib) {
      const auto qs = invariant_contractions(c);
      Json out = Json::array();
      for (std::size_t k = 0; k < qs.size(); ++k) {
        if (q && *q != k) continue;
        const auto f = fiber(c, qs[k]);
        Json pts = Json::array();
        for (const auto& p : f) pts.push_back(subspace_json(a, p));
        out.push_back({{"q", subspace_json(a, qs[k])}, {"points", pts}, {"matches_enumeration", f == brute_fiber(c, qs[k])}});
      }
      if (q && *q >= qs.size()) throw Error("contraction index out of range");
      return emit(out);
    }
    for (const auto& [sub, name] : single)
      if (*sub) return emit_report(c, {name});
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
