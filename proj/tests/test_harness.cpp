#include "doctest.h"
#include "weylkit/suites.hpp"
#include "weylkit/error.hpp"

using namespace weylkit;

TEST_CASE("suite reports are deterministic byte-for-byte") {
  SuiteConfig cfg;
  cfg.suite = "composition";
  cfg.ring_spec = "zmod:97";
  cfg.trials = 40;
  cfg.seed = 42;
  auto a = run_suite(cfg);
  auto b = run_suite(cfg);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.all_pass());

  // different seed still passes but may sample differently
  cfg.seed = 43;
  auto c = run_suite(cfg);
  CHECK(c.all_pass());
}

TEST_CASE("unknown suites and rings are usage errors") {
  SuiteConfig cfg;
  cfg.suite = "no-such-suite";
  CHECK_THROWS_AS(run_suite(cfg), UsageError);
  cfg.suite = "composition";
  cfg.ring_spec = "zmod:0";
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg.ring_spec = "zmod:7";
  cfg.trials = 0;
  CHECK_THROWS_AS(run_suite(cfg), UsageError);
  cfg.trials = 5;
  cfg.mutation = "no-such-mutation";
  CHECK_THROWS_AS(run_suite(cfg), UsageError);
}

TEST_CASE("mutations are caught with witnesses") {
  SuiteConfig cfg;
  cfg.suite = "composition";
  cfg.ring_spec = "zmod:97";
  cfg.trials = 60;
  cfg.seed = 7;
  cfg.mutation = "zorn-cross-flip";
  auto rep = run_suite(cfg);
  CHECK(!rep.all_pass());
  bool witnessed = false;
  for (const auto& c : rep.checks)
    if (!c.pass && !c.witness.empty()) witnessed = true;
  CHECK(witnessed);

  SuiteConfig cfg2;
  cfg2.suite = "albert-identities";
  cfg2.ring_spec = "zmod:97";
  cfg2.trials = 60;
  cfg2.seed = 7;
  cfg2.mutation = "albert-sharp-drop";
  auto rep2 = run_suite(cfg2);
  CHECK(!rep2.all_pass());
  bool norm_sharp_failed = false;
  for (const auto& c : rep2.checks)
    if (c.name == "axiom/norm-sharp" && !c.pass && !c.witness.empty()) norm_sharp_failed = true;
  CHECK(norm_sharp_failed);
}

TEST_CASE("weyl suite name embeds the realization") {
  SuiteConfig cfg;
  cfg.suite = "weyl:sl:1";
  cfg.ring_spec = "rat";
  cfg.trials = 10;
  cfg.seed = 3;
  auto rep = run_suite(cfg);
  CHECK(rep.all_pass());
  CHECK(rep.config.realization == "sl:1");

  SuiteConfig bad;
  bad.suite = "weyl";
  CHECK_THROWS_AS(run_suite(bad), UsageError);
}

TEST_CASE("json structure carries status and summary") {
  SuiteConfig cfg;
  cfg.suite = "so3-normalizer";
  cfg.ring_spec = "zmod:4";
  cfg.trials = 32;
  cfg.seed = 9;
  auto rep = run_suite(cfg);
  CHECK(rep.all_pass());
  std::string j = rep.to_json();
  CHECK(j.find("\"suite\": \"so3-normalizer\"") != std::string::npos);
  CHECK(j.find("\"ring\": \"zmod:4\"") != std::string::npos);
  CHECK(j.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(j.find("\"summary\"") != std::string::npos);
}

TEST_CASE("parallel flag preserves the report bytes") {
  SuiteConfig cfg;
  cfg.suite = "freudenthal";
  cfg.ring_spec = "zmod:5";
  cfg.trials = 12;
  cfg.seed = 11;
  auto serial = run_suite(cfg);
  cfg.parallel = true;
  auto parallel = run_suite(cfg);
  CHECK(serial.all_pass());
  CHECK(serial.to_json() == parallel.to_json());
}
