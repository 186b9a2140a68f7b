#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "skewcorr/state.hpp"

namespace skewcorr::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kVerificationFailed = 2 };

struct StateSource {
  std::string builtin;  // exactly one of builtin / file is set
  std::string file;

  BipartiteState load() const;
  std::string describe() const;
};

struct ComputeOptions {
  StateSource source;
  bool json = false;
};

struct SweepOptions {
  StateSource source;
  std::string channel = "amplitude-damping";
  int points = 101;
  std::string out;  // empty or "-" writes to stdout
};

struct GenOptions {
  std::string kind;  // random-mixed, random-pure, product
  int dim_a = 2;
  int dim_b = 2;
  std::uint64_t seed = 0;
  std::string out;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 50;
};

// `%.12g`.
std::string format_value(double x);

// Each command writes its product to `out`, diagnostics to `err`, and
// returns a process exit code. Library errors are reported, not thrown.
int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

// The CSV table written by `sweep`, header included.
std::string format_sweep_csv(const BipartiteState& rho, const std::string& channel, int points);

}  // namespace skewcorr::cli
