#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewcorr::cli {

struct SuiteResult {
  std::string suite;
  std::string check;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  int trials = 0;
  int first_failure = -1;  // trial index, -1 when every trial passed

  bool passed() const { return first_failure < 0; }
  void record(int trial, double deviation);
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

// Seeds for (suite stream, trial) pairs, mixed with splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

/// Runs the closed-form-vs-oracle, local-unitary-invariance, contractivity,
/// purity-reduction and hellinger-identity suites over `trials` seeded
/// random states each.
VerifyReport run_verification(std::uint64_t seed, int trials);

std::string format_report(const VerifyReport& report);

}  // namespace skewcorr::cli
