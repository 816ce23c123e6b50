#include <set>

#include "doctest.h"
#include "json.hpp"
#include "skewverify/suite.hpp"

using namespace skewverify;

namespace {

BialgebraSpec fixture(const std::string& name) { return parse_spec(fixture_path(name)); }

SuiteConfig config(std::string suite, std::size_t jobs = 1) {
  SuiteConfig c;
  c.suite = std::move(suite);
  c.jobs = jobs;
  return c;
}

std::vector<std::string> failing(const SuiteRun& run) {
  std::vector<std::string> out;
  for (const auto& r : run.reports) {
    for (const auto& l : r.laws) {
      if (l.status != LawStatus::pass && !l.optional) out.push_back(r.suite + "/" + l.id);
    }
  }
  return out;
}

BialgebraSpec without_r(BialgebraSpec s) {
  s.r.reset();
  s.rbar.reset();
  return s;
}

}  // namespace

TEST_CASE("z2_sign passes everything") {
  auto run = run_suite(fixture("z2_sign"), config("all", 2));
  CHECK(run.exit_code == 0);
  CHECK(failing(run).empty());
  CHECK(run.reports.size() == suite_ids().size() - 1);
}

TEST_CASE("z2_sign skew suite at probe dims 1,1,1,1") {
  auto run = run_suite(fixture("z2_sign"), config("skew"));
  REQUIRE(run.reports.size() == 1);
  CHECK(run.exit_code == 0);
  const auto& m1 = run.reports[0].at("M1");
  CHECK(m1.status == LawStatus::pass);
  CHECK(m1.probes_checked > 0);
}

TEST_CASE("s3_flip braiding fails exactly Sstar") {
  auto run = run_suite(fixture("s3_flip"), config("braiding"));
  CHECK(run.exit_code == 1);
  CHECK(failing(run) == std::vector<std::string>{"braiding/Sstar"});
  CHECK(run.reports[0].passed("S1"));
  REQUIRE(run.reports[0].at("Sstar").witness.has_value());
}

TEST_CASE("laws appear once per suite") {
  auto run = run_suite(fixture("sweedler_lambda1"), config("all"));
  for (const auto& r : run.reports) {
    CAPTURE(r.suite);
    std::set<std::string> ids;
    for (const auto& l : r.laws) CHECK(ids.insert(l.id).second);
    CHECK_FALSE(r.laws.empty());
  }
}

TEST_CASE("output is deterministic and independent of the worker count") {
  auto spec = fixture("z4_f5");
  auto a = config("all", 1), b = config("all", 4);
  const std::string ja = render_json(spec, a, run_suite(spec, a));
  const std::string jb = render_json(spec, b, run_suite(spec, b));
  CHECK(ja == jb);
  CHECK(ja == render_json(spec, a, run_suite(spec, a)));
  CHECK(render_human(spec, a, run_suite(spec, a)) == render_human(spec, b, run_suite(spec, b)));
}

TEST_CASE("json report schema") {
  auto spec = fixture("s3_flip");
  auto cfg = config("braiding");
  cfg.seed = 7;
  auto j = nlohmann::json::parse(render_json(spec, cfg, run_suite(spec, cfg)));
  CHECK(j["suite"] == "braiding");
  CHECK(j["seed"] == 7);
  CHECK(j["exit_code"] == 1);
  CHECK(j["probes"].is_array());
  CHECK_FALSE(j.contains("elapsed_ms"));
  bool saw = false;
  for (const auto& l : j["laws"]) {
    CHECK(l.contains("id"));
    CHECK(l.contains("status"));
    if (l["id"] == "Sstar") {
      saw = true;
      CHECK(l["status"] == "fail");
      CHECK(l["witness"]["probe"].is_string());
      CHECK(l["lhs"].is_string());
      CHECK(l["rhs"].is_string());
    }
  }
  CHECK(saw);
  cfg.timing = true;
  j = nlohmann::json::parse(render_json(spec, cfg, run_suite(spec, cfg)));
  CHECK(j.contains("elapsed_ms"));

  auto all = nlohmann::json::parse(render_json(fixture("trivial"), config("all"), run_suite(fixture("trivial"), config("all"))));
  CHECK(all["reports"].size() == suite_ids().size() - 1);
}

TEST_CASE("suites that need r") {
  auto plain = without_r(fixture("z2_sign"));
  for (const char* id : {"cobraiding", "y-axioms", "braiding", "derived", "roundtrip"}) {
    CAPTURE(id);
    CHECK_THROWS_AS(run_suite(plain, config(id)), ValidationError);
  }
  auto run = run_suite(plain, config("all"));
  CHECK(run.exit_code == 0);
  std::vector<std::string> ids;
  for (const auto& r : run.reports) ids.push_back(r.suite);
  CHECK(ids == std::vector<std::string>{"bialgebra", "skew", "closed", "comodules", "multicat"});
}

TEST_CASE("config validation") {
  auto spec = fixture("trivial");
  CHECK_THROWS_AS(run_suite(spec, config("nope")), ValidationError);
  auto c = config("skew");
  c.probe_dims = {1, 4, 1, 1};
  CHECK_THROWS_AS(run_suite(spec, c), ValidationError);
  c.probe_dims = {0, 1, 1, 1};
  CHECK_THROWS_AS(run_suite(spec, c), ValidationError);
  c.probe_dims = {3, 3, 3, 3};
  CHECK(run_suite(spec, c).exit_code == 0);
}

TEST_CASE("failing bialgebra axioms exit 1") {
  auto spec = fixture("z2_sign");
  spec.bialgebra.eps = spec.bialgebra.eps.scaled(Field::rational().from_int(2));
  auto run = run_suite(spec, config("bialgebra"));
  CHECK(run.exit_code == 1);
  CHECK(render_human(spec, config("bialgebra"), run).find("FAIL") != std::string::npos);
  auto all = run_suite(spec, config("all"));
  REQUIRE(all.reports.size() == 1);
  CHECK(all.reports[0].suite == "bialgebra");
  CHECK(all.exit_code == 1);
  CHECK_THROWS_AS(run_suite(spec, config("skew")), ValidationError);
}
