#include "skewcorr/oracle.hpp"

#include <cmath>
#include <numbers>

#include "skewcorr/error.hpp"

namespace skewcorr::oracle {

namespace {

constexpr int kGoldenSteps = 40;
constexpr double kBracketShrink = 0.8;

void require_qubit_a(const BipartiteState& rho, const char* op) {
  if (rho.dim_a() != 2) throw UnsupportedDimensionError(rho.dim_a(), op);
}

bool improves(double candidate, double incumbent, Sense sense) {
  return sense == Sense::kMaximize ? candidate > incumbent : candidate < incumbent;
}

// Golden-section search of f on [lo, hi]. Returns the best abscissa seen
// together with its value.
std::pair<double, double> golden_section(const std::function<double(double)>& f, double lo,
                                         double hi, Sense sense) {
  const double inv_phi = 1.0 / std::numbers::phi;
  double a = lo;
  double b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c);
  double fd = f(d);
  double best_x = c;
  double best_f = fc;
  if (improves(fd, best_f, sense)) {
    best_x = d;
    best_f = fd;
  }
  for (int step = 0; step < kGoldenSteps; ++step) {
    if (improves(fc, fd, sense)) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
      if (improves(fc, best_f, sense)) {
        best_x = c;
        best_f = fc;
      }
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
      if (improves(fd, best_f, sense)) {
        best_x = d;
        best_f = fd;
      }
    }
  }
  return {best_x, best_f};
}

DirectionObjective skew_objective(const BipartiteState& rho) {
  const ComplexMatrix root = matrix_sqrt(rho.matrix());
  const ComplexMatrix id_b = identity(rho.dim_b());
  return [root, id_b](const Vec3& n) {
    return skew_information_from_root(root, kron(pauli_dot(n), id_b));
  };
}

}  // namespace

std::vector<Vec3> fibonacci_sphere(int count) {
  if (count < 1) throw ValidationError("samples", "need at least one sphere sample");
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double radius = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    points.emplace_back(radius * std::cos(phi), radius * std::sin(phi), z);
  }
  return points;
}

SphereSearch sphere_search(const DirectionObjective& objective, Sense sense,
                           int coarse_samples, int refine_iters) {
  const std::vector<Vec3> grid = fibonacci_sphere(coarse_samples);
  SphereSample best{grid.front(), objective(grid.front())};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = objective(grid[i]);
    if (improves(v, best.value, sense)) best = {grid[i], v};
  }

  SphereSearch out{best, best};
  if (refine_iters <= 0) return out;

  // Frame with e1 on the grid optimum; (lat, lon) = (0, 0) maps to e1 and
  // the coordinate poles sit a quarter turn away.
  const Vec3 e1 = best.n;
  Eigen::Index axis = 0;
  e1.cwiseAbs().minCoeff(&axis);
  const Vec3 e2 = e1.cross(Vec3::Unit(axis)).normalized();
  const Vec3 e3 = e1.cross(e2);
  auto point = [&](double lat, double lon) -> Vec3 {
    return std::cos(lat) * (std::cos(lon) * e1 + std::sin(lon) * e2) + std::sin(lat) * e3;
  };

  double lat = 0.0;
  double lon = 0.0;
  double half_width = 2.0 * std::sqrt(4.0 * std::numbers::pi / coarse_samples);
  SphereSample current = best;
  for (int iter = 0; iter < refine_iters; ++iter) {
    {
      auto [x, v] = golden_section([&](double t) { return objective(point(t, lon)); },
                                   lat - half_width, lat + half_width, sense);
      if (improves(v, current.value, sense)) {
        lat = x;
        current = {point(lat, lon), v};
      }
    }
    {
      auto [x, v] = golden_section([&](double t) { return objective(point(lat, t)); },
                                   lon - half_width, lon + half_width, sense);
      if (improves(v, current.value, sense)) {
        lon = x;
        current = {point(lat, lon), v};
      }
    }
    half_width *= kBracketShrink;
  }
  out.refined = current;
  return out;
}

Observable observable_from_direction(const Vec3& n, int dim_b) {
  return Observable::from_direction(n, dim_b);
}

double oracle_uin(const BipartiteState& rho, int coarse_samples, int refine_iters) {
  require_qubit_a(rho, "oracle_uin");
  const Vec3 r = bloch_vector_a(rho).r;
  if (r.norm() > kRZeroThreshold) {
    // [n.sigma, rho_a] = 0 forces n = +-r/|r|, and I(rho, K) = I(rho, -K).
    return skew_information(rho, observable_from_direction(r, rho.dim_b()));
  }
  return sphere_search(skew_objective(rho), Sense::kMaximize, coarse_samples, refine_iters)
      .refined.value;
}

double oracle_muin(const BipartiteState& rho, int coarse_samples, int refine_iters) {
  require_qubit_a(rho, "oracle_muin");
  return sphere_search(skew_objective(rho), Sense::kMaximize, coarse_samples, refine_iters)
      .refined.value;
}

double oracle_lqu(const BipartiteState& rho, int coarse_samples, int refine_iters) {
  require_qubit_a(rho, "oracle_lqu");
  return sphere_search(skew_objective(rho), Sense::kMinimize, coarse_samples, refine_iters)
      .refined.value;
}

double measurement_disturbance(const BipartiteState& rho, const Vec3& n) {
  require_qubit_a(rho, "measurement_disturbance");
  const Vec3 unit = n.normalized();
  const ComplexMatrix id_b = identity(rho.dim_b());
  const ComplexMatrix k = pauli_dot(unit);
  ComplexMatrix measured = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (double sign : {1.0, -1.0}) {
    const ComplexMatrix proj = kron(0.5 * (identity(2) + sign * k), id_b);
    measured += proj * rho.matrix() * proj;
  }
  return (rho.matrix() - measured).squaredNorm();
}

double oracle_min_hs(const BipartiteState& rho, int measurement_samples, int refine_iters) {
  require_qubit_a(rho, "oracle_min_hs");
  const Vec3 r = bloch_vector_a(rho).r;
  if (r.norm() > kRZeroThreshold) return measurement_disturbance(rho, r);
  return sphere_search([&](const Vec3& n) { return measurement_disturbance(rho, n); },
                       Sense::kMaximize, measurement_samples, refine_iters)
      .refined.value;
}

}  // namespace skewcorr::oracle
