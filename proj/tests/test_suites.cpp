#include <doctest.h>

#include "mstar/corpus.hpp"
#include "mstar/suites.hpp"
#include "support.hpp"

using namespace mstar;

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 9);
  CHECK(oracle::error_kind([] { run_suite("nope", default_corpus(), {}); }) == ErrorKind::invalid_argument);
  for (const auto& name : suite_names()) CHECK(run_suite(name, Corpus{}, {}).checks.empty());
}

TEST_CASE("reports are deterministic and valid") {
  const Corpus corpus = default_corpus();
  SuiteOptions o;
  const SuiteReport a = run_suite("model", corpus, o), b = run_suite("model", corpus, o);
  CHECK(a.to_json(o) == b.to_json(o));
  CHECK(validate_report(a.to_json(o)));
  CHECK(a.exit_code() == 0);
  CHECK(a.table().find("model") != std::string::npos);
  CHECK(a.to_dot().rfind("digraph", 0) == 0);
  o.seed = 17;
  CHECK(run_suite("model", corpus, o).exit_code() == 0);
}

TEST_CASE("report validation catches tampering") {
  const SuiteOptions o;
  nlohmann::json j = run_suite("pi", default_corpus(), o).to_json(o);
  REQUIRE(validate_report(j));
  j["summary"]["pass"] = j["summary"]["pass"].get<int>() + 1;
  CHECK_FALSE(validate_report(j));
  nlohmann::json k = run_suite("pi", default_corpus(), o).to_json(o);
  k["checks"][0]["status"] = "maybe";
  CHECK_FALSE(validate_report(k));
}

TEST_CASE("tight limits skip or stop, never fail") {
  SuiteOptions o;
  o.max_objects = 1;
  o.max_morphisms = 2;
  const SuiteReport r = run_suite("exponential-law", default_corpus(), o);
  CHECK(r.count(CheckStatus::fail) == 0);
  CHECK(r.count(CheckStatus::skipped) > 0);
  o = {};
  o.bound = 1;
  const SuiteReport s = run_suite("representability", default_corpus(), o);
  CHECK(s.count(CheckStatus::bound_exceeded) > 0);
  CHECK(s.exit_code() == 3);
}

TEST_CASE("exit code precedence") {
  SuiteReport r;
  CHECK(r.exit_code() == 0);
  r.checks.push_back({"x", "a:b", CheckStatus::bound_exceeded, {}});
  CHECK(r.exit_code() == 3);
  r.checks.push_back({"x", "a:c", CheckStatus::fail, {}});
  CHECK(r.exit_code() == 1);
}
