#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bosonic {

struct VerifyOptions {
  unsigned max_modes = 4;
  unsigned max_photons = 4;
  std::uint64_t seed = 20250101;
  std::uint64_t mc_samples = 20000;
  bool skip_mc = false;
  unsigned jobs = 1;
};

struct SuiteResult {
  std::string name;
  bool stochastic = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  unsigned attempts = 1;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && cases > 0; }
};

/// Names of all suites in run order; MC suites last.
std::vector<std::string> verify_suite_names(bool include_mc = true);

/// One attempt of a single suite.
SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& options,
                             std::uint64_t seed);

/// Every suite; stochastic ones get one retry with a fresh seed on failure.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

/// "PASS name (cases, failures, seconds)" lines plus the first failing case.
void print_verify_report(std::ostream& out, const std::vector<SuiteResult>& results);

}  // namespace bosonic
