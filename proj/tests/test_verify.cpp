#include "twistkit/verify.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/error.hpp"

using namespace tk;

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 6);
  CHECK(known_suite("cocycle-identity"));
  CHECK(known_suite("arc-conditions"));
  CHECK(!known_suite("no-such"));
  SuiteConfig cfg;
  CHECK_THROWS_AS(run_suite("no-such", cfg), Error);
}

TEST_CASE("cocycle identity suite passes at genus 2") {
  SuiteConfig cfg;
  cfg.case_count = 10;
  cfg.max_word_len = 4;
  SuiteReport rep = run_suite("cocycle-identity", cfg);
  CHECK(rep.passed());
  // ten generator pairs squared plus the random ones
  CHECK(rep.cases == 10 * 10 + 10);
  CHECK(rep.seed == 42);
}

TEST_CASE("monomiality suite passes at genus 2") {
  SuiteConfig cfg;
  cfg.case_count = 6;
  cfg.max_word_len = 4;
  SuiteReport rep = run_suite("monomiality", cfg);
  CHECK(rep.passed());
  CHECK(rep.cases == (10 * 10 + 6) * 3);
}

TEST_CASE("grand cross-check suite passes at genus 2") {
  SuiteConfig cfg;
  cfg.case_count = 6;
  cfg.max_word_len = 4;
  SuiteReport rep = run_suite("grand-cross-check", cfg);
  CHECK(rep.passed());
  CHECK(rep.cases == (10 * 10 + 6) * 3);
}

TEST_CASE("chart consistency suite passes at genus 2") {
  SuiteConfig cfg;
  cfg.case_count = 5;
  SuiteReport rep = run_suite("chart-consistency", cfg);
  CHECK(rep.passed());
  CHECK(rep.cases > 0);
}

TEST_CASE("push formula suite passes closed and with boundary") {
  SuiteConfig cfg;
  CHECK(run_suite("push-formulas", cfg).passed());
  cfg.punctures = 2;
  CHECK(run_suite("push-formulas", cfg).passed());
  cfg.punctures = 0;
  cfg.marked = 2;
  CHECK(run_suite("push-formulas", cfg).passed());
}

TEST_CASE("arc condition suite needs marked points") {
  SuiteConfig cfg;
  CHECK_THROWS_AS(run_suite("arc-conditions", cfg), Error);
  cfg.marked = 3;
  SuiteReport rep = run_suite("arc-conditions", cfg);
  CHECK(rep.passed());
  CHECK(rep.cases == 6);
}

TEST_CASE("reports are deterministic in the seed") {
  SuiteConfig cfg;
  cfg.case_count = 4;
  cfg.max_word_len = 3;
  SuiteReport a = run_suite("cocycle-identity", cfg);
  SuiteReport b = run_suite("cocycle-identity", cfg);
  CHECK(report_text(a) == report_text(b));
  cfg.seed = 7;
  SuiteReport c = run_suite("cocycle-identity", cfg);
  CHECK(c.seed == 7);
}

TEST_CASE("report serializations") {
  SuiteConfig cfg;
  cfg.case_count = 2;
  cfg.max_word_len = 2;
  SuiteReport rep = run_suite("cocycle-identity", cfg);
  std::string text = report_text(rep);
  CHECK(text.find("cocycle-identity") == 0);
  CHECK(text.find("0 failures") != std::string::npos);
  std::string j = report_json(rep);
  CHECK(j.find("\"suite\": \"cocycle-identity\"") != std::string::npos);
  CHECK(j.find("\"failures\": []") != std::string::npos);
}
