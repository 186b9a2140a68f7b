#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "skewcorr/channels.hpp"
#include "skewcorr/measures.hpp"
#include "skewcorr/oracle.hpp"
#include "skewcorr/state.hpp"

namespace skewcorr::cli {

namespace {

constexpr double kForced = 1e-9;
constexpr double kSphere = 2e-4;
constexpr double kInvariance = 1e-9;
constexpr double kContraction = 1e-9;
constexpr double kPurity = 1e-8;
constexpr double kHellinger = 1e-10;

enum Stream : std::uint64_t {
  kOracleStream = 1,
  kUnitaryStream,
  kContractStream,
  kPureStream,
  kHellingerStream,
};

SuiteResult make(std::string suite, std::string check, double tolerance) {
  SuiteResult s;
  s.suite = std::move(suite);
  s.check = std::move(check);
  s.tolerance = tolerance;
  s.max_deviation = -std::numeric_limits<double>::infinity();
  return s;
}

int dim_b_for(int trial) { return trial % 2 == 0 ? 2 : 3; }

BipartiteState random_state(std::uint64_t seed, int trial, int dim_b) {
  const int d = 2 * dim_b;
  const int rank = 1 + trial % d;
  return BipartiteState(random_density(d, rank, seed), 2, dim_b);
}

Vec3 random_direction(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 n;
  do {
    n = Vec3(normal(gen), normal(gen), normal(gen));
  } while (n.norm() < 1e-6);
  return n.normalized();
}

double unit_uniform(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return std::uniform_real_distribution<double>(0.0, 1.0)(gen);
}

std::vector<SuiteResult> oracle_suite(std::uint64_t seed, int trials) {
  auto forced = make("closed-form-vs-oracle", "uin-forced-direction", kForced);
  auto rzero = make("closed-form-vs-oracle", "uin-r-zero", kSphere);
  auto mu = make("closed-form-vs-oracle", "muin", kSphere);
  auto lq = make("closed-form-vs-oracle", "lqu", kSphere);
  for (int t = 0; t < trials; ++t) {
    const BipartiteState rho =
        random_state(derive_seed(seed, kOracleStream, t), t, dim_b_for(t));
    forced.record(t, std::abs(uin(rho).value - oracle::oracle_uin(rho)));
    mu.record(t, std::abs(muin(rho).value - oracle::oracle_muin(rho)));
    lq.record(t, std::abs(lqu(rho).value - oracle::oracle_lqu(rho)));
    const BipartiteState centred = zero_marginal_bloch(rho);
    rzero.record(t, std::abs(uin(centred).value - oracle::oracle_uin(centred)));
  }
  return {forced, rzero, mu, lq};
}

std::vector<SuiteResult> unitary_suite(std::uint64_t seed, int trials) {
  auto su = make("local-unitary-invariance", "uin", kInvariance);
  auto sm = make("local-unitary-invariance", "muin", kInvariance);
  auto sl = make("local-unitary-invariance", "lqu", kInvariance);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, kUnitaryStream, t);
    const int db = dim_b_for(t);
    const BipartiteState rho = random_state(s, t, db);
    const BipartiteState moved =
        apply_local_unitary(rho, random_unitary(2, s + 1), random_unitary(db, s + 2));
    su.record(t, std::abs(uin(moved).value - uin(rho).value));
    sm.record(t, std::abs(muin(moved).value - muin(rho).value));
    sl.record(t, std::abs(lqu(moved).value - lqu(rho).value));
  }
  return {su, sm, sl};
}

std::vector<SuiteResult> contraction_suite(std::uint64_t seed, int trials) {
  const char* families[] = {"amplitude-damping", "phase-damping", "depolarizing"};
  std::vector<SuiteResult> out;
  for (const char* name : families) out.push_back(make("contractivity", name, kContraction));
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, kContractStream, t);
    // The channel families act on a qubit, so B is a qubit here.
    const BipartiteState rho = random_state(s, t, 2);
    const double p = unit_uniform(s + 1);
    const double before[] = {uin(rho).value, muin(rho).value, lqu(rho).value};
    for (std::size_t f = 0; f < out.size(); ++f) {
      const BipartiteState after = apply_channel_b(rho, channel_family(families[f])(p));
      const double now[] = {uin(after).value, muin(after).value, lqu(after).value};
      double increase = -std::numeric_limits<double>::infinity();
      for (int m = 0; m < 3; ++m) increase = std::max(increase, now[m] - before[m]);
      out[f].record(t, increase);
    }
  }
  return out;
}

SuiteResult purity_suite(std::uint64_t seed, int trials) {
  auto s = make("purity-reduction", "uin-vs-uin_pure", kPurity);
  for (int t = 0; t < trials; ++t) {
    const BipartiteState psi = random_pure(2, dim_b_for(t), derive_seed(seed, kPureStream, t));
    s.record(t, std::abs(uin(psi).value - uin_pure(psi).value));
  }
  return s;
}

SuiteResult hellinger_suite(std::uint64_t seed, int trials) {
  auto s = make("hellinger-identity", "skew-vs-hellinger", kHellinger);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t st = derive_seed(seed, kHellingerStream, t);
    const int db = dim_b_for(t);
    const BipartiteState rho = random_state(st, t, db);
    const Observable k = Observable::from_direction(random_direction(st + 1), db);
    const ComplexMatrix flipped = k.matrix() * rho.matrix() * k.matrix();
    s.record(t, std::abs(skew_information(rho, k) - hellinger_sq(rho.matrix(), flipped)));
  }
  return s;
}

std::string fmt(const char* spec, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

}  // namespace

void SuiteResult::record(int trial, double deviation) {
  ++trials;
  if (deviation > max_deviation || std::isnan(deviation)) max_deviation = deviation;
  if (first_failure < 0 && !(deviation <= tolerance)) first_failure = trial;
}

bool VerifyReport::passed() const {
  for (const SuiteResult& s : suites) {
    if (!s.passed()) return false;
  }
  return true;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream * 0x100000001b3ULL + trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

VerifyReport run_verification(std::uint64_t seed, int trials) {
  VerifyReport report;
  report.seed = seed;
  report.trials = trials;
  auto append = [&](std::vector<SuiteResult> v) {
    report.suites.insert(report.suites.end(), v.begin(), v.end());
  };
  append(oracle_suite(seed, trials));
  append(unitary_suite(seed, trials));
  append(contraction_suite(seed, trials));
  report.suites.push_back(purity_suite(seed, trials));
  report.suites.push_back(hellinger_suite(seed, trials));
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "verify seed=" << report.seed << " trials=" << report.trials << "\n";
  for (const SuiteResult& s : report.suites) {
    out << s.suite << "/" << s.check << " max_dev=" << fmt("%.3e", s.max_deviation)
        << " tol=" << fmt("%.0e", s.tolerance) << " " << (s.passed() ? "PASS" : "FAIL");
    if (!s.passed()) out << " first_failure=" << s.first_failure;
    out << "\n";
  }
  out << "overall=" << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace skewcorr::cli
