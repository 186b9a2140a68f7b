#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "skewcorr/channels.hpp"
#include "skewcorr/error.hpp"
#include "skewcorr/measures.hpp"
#include "state_file.hpp"
#include "verify.hpp"

namespace skewcorr::cli {

namespace {

const std::vector<std::string> kSweepColumns = {"uin", "muin", "lqu", "min_hs"};

// Writes to `path`, or to `fallback` when the path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("io", "cannot write '" + path + "'");
  file << text;
  if (!file) throw ValidationError("io", "write to '" + path + "' failed");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    err << "error [" << e.check() << "]: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInvalidInput;
}

}  // namespace

BipartiteState StateSource::load() const {
  if (!builtin.empty() && !file.empty()) {
    throw ValidationError("source", "give either a builtin name or a file, not both");
  }
  if (!builtin.empty()) return builtin_state(builtin);
  if (!file.empty()) return read_state_file(file);
  throw ValidationError("source", "no state given (use --builtin or --file)");
}

std::string StateSource::describe() const {
  return builtin.empty() ? "file:" + file : "builtin:" + builtin;
}

std::string format_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BipartiteState rho = opts.source.load();
    if (rho.dim_a() != 2) throw UnsupportedDimensionError(rho.dim_a(), "compute");
    const MeasureValue u = uin(rho);
    const double muin_v = muin(rho).value;
    const double lqu_v = lqu(rho).value;
    const double min_v = min_hs(rho).value;
    const Vec3 r = bloch_vector_a(rho).r;
    const Vec3 lambda = w_matrix(rho).eigenvalues();

    if (opts.json) {
      nlohmann::ordered_json doc;
      doc["source"] = opts.source.describe();
      doc["dims"] = {rho.dim_a(), rho.dim_b()};
      doc["uin"] = u.value;
      doc["uin_branch"] = std::string(to_string(u.branch));
      doc["muin"] = muin_v;
      doc["lqu"] = lqu_v;
      doc["min_hs"] = min_v;
      doc["bloch"] = {r[0], r[1], r[2]};
      doc["bloch_norm"] = r.norm();
      doc["w_eigenvalues"] = {lambda[0], lambda[1], lambda[2]};
      out << doc.dump(2) << "\n";
      return kOk;
    }
    out << "source=" << opts.source.describe() << "\n"
        << "dims=" << rho.dim_a() << "x" << rho.dim_b() << "\n"
        << "uin=" << format_value(u.value) << "\n"
        << "uin_branch=" << to_string(u.branch) << "\n"
        << "muin=" << format_value(muin_v) << "\n"
        << "lqu=" << format_value(lqu_v) << "\n"
        << "min_hs=" << format_value(min_v) << "\n"
        << "bloch=" << format_value(r[0]) << "," << format_value(r[1]) << ","
        << format_value(r[2]) << "\n"
        << "bloch_norm=" << format_value(r.norm()) << "\n"
        << "w_eigenvalues=" << format_value(lambda[0]) << "," << format_value(lambda[1])
        << "," << format_value(lambda[2]) << "\n";
    return kOk;
  });
}

std::string format_sweep_csv(const BipartiteState& rho, const std::string& channel, int points) {
  const SweepSeries series =
      sweep(rho, channel_family(channel), uniform_grid(points), kSweepColumns);
  std::ostringstream csv;
  csv << "gamma";
  for (const std::string& label : series.labels) csv << "," << label;
  csv << "\n";
  for (std::size_t g = 0; g < series.grid.size(); ++g) {
    csv << format_value(series.grid[g]);
    for (const auto& column : series.values) csv << "," << format_value(column[g]);
    csv << "\n";
  }
  return csv.str();
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BipartiteState rho = opts.source.load();
    // Resolve the channel first so a bad name never leaves a partial file.
    channel_family(opts.channel);
    emit(opts.out, format_sweep_csv(rho, opts.channel, opts.points), out);
    return kOk;
  });
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.dim_a < 1 || opts.dim_b < 1) {
      throw ValidationError("dimensions", "dimensions must be positive");
    }
    if (opts.dim_a != 2) {
      err << "warning: dA = " << opts.dim_a
          << "; the closed-form measures only accept dA = 2\n";
    }
    const int d = opts.dim_a * opts.dim_b;
    auto make = [&]() -> BipartiteState {
      if (opts.kind == "random-mixed") {
        return BipartiteState(random_density(d, d, opts.seed), opts.dim_a, opts.dim_b);
      }
      if (opts.kind == "random-pure") return random_pure(opts.dim_a, opts.dim_b, opts.seed);
      if (opts.kind == "product") {
        return product_state(random_density(opts.dim_a, opts.dim_a, opts.seed),
                             random_density(opts.dim_b, opts.dim_b, opts.seed + 1));
      }
      throw ValidationError("kind", "unknown state kind '" + opts.kind + "'");
    };
    emit(opts.out, format_state_file(make()), out);
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.trials < 1) throw ValidationError("trials", "trials must be >= 1");
    const VerifyReport report = run_verification(opts.seed, opts.trials);
    out << format_report(report);
    if (!report.passed()) {
      for (const SuiteResult& s : report.suites) {
        if (!s.passed()) {
          err << "verification failed: suite=" << s.suite << " check=" << s.check
              << " seed=" << opts.seed << " trial=" << s.first_failure << "\n";
        }
      }
      return static_cast<int>(kVerificationFailed);
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace skewcorr::cli
