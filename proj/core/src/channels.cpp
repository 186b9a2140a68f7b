#include "skewcorr/channels.hpp"

#include <cmath>
#include <string>

#include "detail.hpp"
#include "skewcorr/error.hpp"
#include "skewcorr/measures.hpp"

namespace skewcorr {

namespace {

constexpr double kCompleteness = 1e-10;

void require_unit_interval(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("parameter", std::string(name) + " = " + detail::sci(p) +
                                           " is outside [0, 1]");
  }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators)
    : operators_(std::move(operators)) {
  if (operators_.empty()) throw ValidationError("kraus", "channel has no operators");
  const Eigen::Index d = operators_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& e : operators_) {
    if (e.rows() != d || e.cols() != d || d == 0) {
      throw ValidationError("kraus", "Kraus operators must share one square dimension");
    }
    sum += e.adjoint() * e;
  }
  const double defect = (sum - ComplexMatrix::Identity(d, d)).norm();
  if (defect > kCompleteness) {
    throw ValidationError("completeness",
                          "||sum E^dagger E - I||_F = " + detail::sci(defect));
  }
}

KrausChannel amplitude_damping(double gamma) {
  require_unit_interval(gamma, "gamma");
  ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix e1 = ComplexMatrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - gamma);
  e1(0, 1) = std::sqrt(gamma);
  return KrausChannel({e0, e1});
}

KrausChannel phase_damping(double lambda) {
  require_unit_interval(lambda, "lambda");
  ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix e1 = ComplexMatrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - lambda);
  e1(1, 1) = std::sqrt(lambda);
  return KrausChannel({e0, e1});
}

KrausChannel depolarizing(double p) {
  require_unit_interval(p, "p");
  const double keep = std::sqrt(1.0 - 0.75 * p);
  const double flip = std::sqrt(0.25 * p);
  return KrausChannel({keep * identity(2), flip * pauli(0), flip * pauli(1), flip * pauli(2)});
}

ChannelFamily channel_family(std::string_view name) {
  if (name == "amplitude-damping") return amplitude_damping;
  if (name == "phase-damping") return phase_damping;
  if (name == "depolarizing") return depolarizing;
  throw ValidationError("channel", "unknown channel '" + std::string(name) + "'");
}

BipartiteState apply_channel_b(const BipartiteState& rho, const KrausChannel& channel) {
  if (channel.dim() != rho.dim_b()) {
    throw ValidationError("dimensions", "channel dimension " + std::to_string(channel.dim()) +
                                            " does not match dB = " +
                                            std::to_string(rho.dim_b()));
  }
  const ComplexMatrix id_a = identity(rho.dim_a());
  ComplexMatrix out = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const ComplexMatrix& e : channel.operators()) {
    const ComplexMatrix lifted = kron(id_a, e);
    out += lifted * rho.matrix() * lifted.adjoint();
  }
  return BipartiteState(validate_density(out), rho.dim_a(), rho.dim_b());
}

Measure parse_measure(std::string_view label) {
  if (label == "uin") return Measure::kUin;
  if (label == "muin") return Measure::kMuin;
  if (label == "lqu") return Measure::kLqu;
  if (label == "min_hs") return Measure::kMinHs;
  throw ValidationError("measure", "unknown measure '" + std::string(label) + "'");
}

std::string_view measure_label(Measure m) {
  switch (m) {
    case Measure::kUin: return "uin";
    case Measure::kMuin: return "muin";
    case Measure::kLqu: return "lqu";
    case Measure::kMinHs: return "min_hs";
  }
  return "unknown";
}

double evaluate(Measure m, const BipartiteState& rho) {
  switch (m) {
    case Measure::kUin: return uin(rho).value;
    case Measure::kMuin: return muin(rho).value;
    case Measure::kLqu: return lqu(rho).value;
    case Measure::kMinHs: return min_hs(rho).value;
  }
  return 0.0;
}

const std::vector<double>& SweepSeries::series(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return values[i];
  }
  throw ValidationError("measure", "series '" + std::string(label) + "' not in sweep");
}

std::vector<double> uniform_grid(int points) {
  if (points < 1) throw ValidationError("grid", "need at least one grid point");
  if (points == 1) return {0.0};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
  return grid;
}

SweepSeries sweep(const BipartiteState& rho, const ChannelFamily& family,
                  const std::vector<double>& grid, const std::vector<std::string>& labels) {
  std::vector<Measure> measures;
  measures.reserve(labels.size());
  for (const std::string& label : labels) measures.push_back(parse_measure(label));

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw ValidationError("grid", "grid must be strictly ascending within [0, 1]");
    }
  }

  SweepSeries out;
  out.grid = grid;
  out.labels = labels;
  out.values.assign(labels.size(), std::vector<double>(grid.size()));
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const BipartiteState damped = apply_channel_b(rho, family(grid[g]));
    for (std::size_t l = 0; l < measures.size(); ++l) {
      out.values[l][g] = evaluate(measures[l], damped);
    }
  }
  return out;
}

}  // namespace skewcorr
