#include "doctest.h"

#include "fbplab/error.hpp"
#include "fbplab/harness/config.hpp"
#include "fbplab/harness/report.hpp"
#include "fbplab/harness/suites.hpp"

using namespace fbplab;
using namespace fbplab::harness;

namespace {
  SuiteReport sample_report() {
    SuiteReport r;
    r.suite   = "demo";
    r.seed    = 3;
    r.version = "0.0.0";
    Check a;
    a.id       = "a";
    a.anchor   = "two plus two";
    a.expected = 4;
    a.actual   = 4;
    a.status   = Status::pass;
    Check b    = a;
    b.id       = "b";
    b.status   = Status::fail;
    b.actual   = 5;
    b.detail   = "x -> [1,3,3], y -> [2,2,3]";
    Check c    = a;
    c.id       = "c";
    c.status   = Status::bounded_pass;
    c.bound    = {{"max_len", 7}};
    r.checks   = {a, b, c};
    return r;
  }
}  // namespace

TEST_CASE("config validation") {
  auto const c = Config::from_json({{"seed", 5}, {"m", 3}});
  CHECK(c.seed == 5);
  CHECK(c.m == 3u);
  CHECK_THROWS_AS(Config::from_json({{"sed", 5}}), InvalidInput);
  CHECK_THROWS_AS(Config::from_json({{"seed", "five"}}), InvalidInput);
  CHECK_THROWS_AS(Config::from_json({{"samples", 0}}), InvalidInput);
  CHECK(Config::from_json(c.to_json()) == Config{c.seed, c.samples, 0, c.stretch, c.m, {}, {}});
}

TEST_CASE("JSON round trip") {
  auto const r = sample_report();
  CHECK(report_from_json(nlohmann::json::parse(emit_report(r, Format::json))) == r);
  CHECK(!r.passed());
}

TEST_CASE("text report shows counterexamples and bounds") {
  auto const text = emit_report(sample_report(), Format::text);
  CHECK(text.find("x -> [1,3,3], y -> [2,2,3]") != std::string::npos);
  CHECK(text.find("[bounded-pass] c") != std::string::npos);
  CHECK(text.find("{\"max_len\":7}") != std::string::npos);
}

TEST_CASE("registry") {
  auto const names = suite_names();
  CHECK(names.size() == registry().size() + 1);
  CHECK_THROWS_AS(run_suite("nonexistent", Config{}), InvalidInput);
}

TEST_CASE("oracle suites honour instance filters") {
  Config c;
  c.m    = 3;
  c.vars = 2;
  c.len  = 6;
  auto const r = run_suite("jm-oracle", c);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == Status::pass);
}

TEST_CASE("bounded verdicts are never plain passes") {
  auto const r = run_suite("isoterms", Config{});
  for (auto const& c : r.checks) {
    CHECK(c.status == Status::bounded_pass);
    CHECK(!c.bound.is_null());
  }
}
