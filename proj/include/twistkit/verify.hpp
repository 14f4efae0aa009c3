#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tk {

struct SuiteConfig {
  int genus = 2;
  int punctures = 0;
  int marked = 1;
  std::uint64_t seed = 42;
  int max_word_len = 6;
  int case_count = 100;
};

struct SuiteFailure {
  std::string input;
  std::string expected;
  std::string actual;
};

// failures empty iff the suite passed; elapsed is wall time for the run
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<SuiteFailure> failures;
  double elapsed_seconds = 0;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
bool known_suite(const std::string& name);

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

std::string report_text(const SuiteReport& rep);
std::string report_json(const SuiteReport& rep);

} // namespace tk
