#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace skewcorr::cli;

namespace {

void add_source(CLI::App* cmd, StateSource& source) {
  auto* builtin = cmd->add_option("--builtin", source.builtin,
                                  "Builtin state: example, bell, product-mixed, max-mixed");
  auto* file = cmd->add_option("--file", source.file, "State file (JSON)");
  builtin->excludes(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew-information correlation measures for 2 x d states"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "Report uin, muin, lqu and min_hs for a state");
  add_source(compute_cmd, compute.source);
  compute_cmd->add_flag("--json", compute.json, "Emit a JSON object instead of key=value lines");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate measures along a channel on subsystem B");
  add_source(sweep_cmd, sweep.source);
  sweep_cmd->add_option("--channel", sweep.channel,
                        "amplitude-damping, phase-damping or depolarizing")
      ->capture_default_str();
  sweep_cmd->add_option("--points", sweep.points, "Uniform grid points on [0, 1]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep.out, "CSV output path (default: stdout)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random state file");
  gen_cmd->add_option("kind", gen.kind, "random-mixed, random-pure or product")->required();
  gen_cmd->add_option("dA", gen.dim_a, "Dimension of subsystem A")->required();
  gen_cmd->add_option("dB", gen.dim_b, "Dimension of subsystem B")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output path (default: stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the closed-form and invariant suites");
  verify_cmd->add_option("--seed", verify.seed, "Ensemble seed")->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials, "Trials per suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (*compute_cmd) return cmd_compute(compute, std::cout, std::cerr);
  if (*sweep_cmd) return cmd_sweep(sweep, std::cout, std::cerr);
  if (*gen_cmd) return cmd_gen(gen, std::cout, std::cerr);
  return cmd_verify(verify, std::cout, std::cerr);
}
