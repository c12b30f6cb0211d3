#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hopfinv/fixtures.hpp"
#include "hopfinv/fuzz.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::filesystem::path kFixtures = HOPFINV_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_error(const std::filesystem::path& p) {
  try {
    parse_instance(p.string());
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixture files round-trip") {
  for (const auto& [name, c] : fixture_corpus()) {
    CAPTURE(name);
    const auto path = kFixtures / (name + ".json");
    REQUIRE(std::filesystem::exists(path));
    const auto parsed = parse_instance(path.string());
    CHECK(canonical_text(parsed) == slurp(path));
    CHECK(instance_digest(parsed) == instance_digest(c));
    CHECK(instance_from_json(instance_to_json(parsed)).delta() == c.delta());
  }
}

TEST_CASE("builders expand to the explicit form") {
  CHECK(canonical_text(parse_instance((kFixtures / "builders" / "g2.json").string())) ==
        slurp(kFixtures / "fix_g2.json"));
  CHECK(canonical_text(parse_instance((kFixtures / "builders" / "der.json").string())) ==
        slurp(kFixtures / "fix_der.json"));
}

TEST_CASE("malformed instances are rejected with a location") {
  const auto neg = kFixtures / "negative";
  CHECK(parse_error(neg / "not_multiplicative.json").find("coaction not multiplicative at (i,j)=(1,1)") !=
        std::string::npos);
  CHECK(parse_error(neg / "bad_prime.json").find("4 is not prime") != std::string::npos);
  CHECK(parse_error(neg / "bad_scalar.json").find("not in lowest terms") != std::string::npos);
  CHECK(parse_error(neg / "missing.json").find("cannot open") != std::string::npos);
  CHECK_THROWS_AS(instance_from_json(Json::array()), Error);
  CHECK_THROWS_AS(instance_from_json(Json{{"field", "Q"}}), Error);
  CHECK_THROWS_AS(group_by_name("C7"), Error);
}

TEST_CASE("pretty_json keeps short containers on one line") {
  const Json j = {{"a", Json::array({1, 2, 3})}, {"b", std::string(120, 'x')}};
  const std::string text = pretty_json(j);
  CHECK(text.find("\"a\": [1,2,3]") != std::string::npos);
  CHECK(Json::parse(text) == j);
  CHECK(pretty_json(Json::array()) == "[]");
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
  CHECK(hex64(fnv1a64("foobar")) == "85944171f73967e8");
}

TEST_CASE("fuzz is deterministic and respects its bounds") {
  FuzzOptions opt;
  opt.seed = 0;
  opt.count = 10;
  opt.field = "F_2";
  const auto a = run_fuzz(opt);
  const auto b = run_fuzz(opt);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.entries.size() == 10);
  CHECK(a.alarm_count() == 0);
  for (const auto& e : a.entries) {
    CHECK(e.field == "F_2");
    CHECK(e.dim_a <= opt.max_dim);
    CHECK(e.dim_a * e.dim_h <= opt.max_tensor);
  }
  opt.count = 0;
  CHECK(run_fuzz(opt).entries.empty());
  opt.count = 30;
  opt.field = "mixed";
  for (const auto& inst : fuzz_corpus(opt)) {
    CHECK(validate_comodule(inst.comodule).ok);
    CHECK(instance_digest(instance_from_json(instance_to_json(inst.comodule))) == instance_digest(inst.comodule));
  }
}

TEST_CASE("reports on the worked fixtures") {
  const Json g2 = run_report(fix_g2(), report_sections()).json;
  CHECK(g2["galois"]["galois"] == true);
  CHECK(g2["integral"]["has_total"] == true);
  const Json sw = run_report(fix_sw(), report_sections()).json;
  CHECK(sw["galois"]["galois"] == false);
  CHECK(sw["simple"]["h_simple"] == true);
  CHECK_THROWS_AS(run_report(fix_sw(), {"nonsense"}), Error);
  const Json nil = run_report(fix_swap_nil_f2(), {"reductivity"}).json["reductivity"];
  CHECK(nil["certificate"] == "none");
  CHECK(nil["surjective_on_family"] == false);
}
