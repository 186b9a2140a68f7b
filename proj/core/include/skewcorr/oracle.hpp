#pragma once

#include <functional>
#include <vector>

#include "skewcorr/linalg.hpp"
#include "skewcorr/measures.hpp"
#include "skewcorr/state.hpp"

// Brute-force optimizers over local directions on subsystem A. Nothing here
// goes through the W-matrix or the correlation Gram matrix: every value is a
// direct evaluation of skew information or of a post-measurement distance,
// so these functions serve as ground truth for the closed forms.
namespace skewcorr::oracle {

inline constexpr int kDefaultCoarseSamples = 2000;
inline constexpr int kDefaultRefineIters = 40;

struct SphereSample {
  Vec3 n = Vec3::UnitZ();
  double value = 0.0;
};

struct SphereSearch {
  SphereSample coarse;   // best Fibonacci-grid point
  SphereSample refined;  // after golden-section refinement
};

enum class Sense { kMaximize, kMinimize };

using DirectionObjective = std::function<double(const Vec3&)>;

// Deterministic, near-uniform points on the unit sphere.
std::vector<Vec3> fibonacci_sphere(int count);

/// Scans a Fibonacci grid of `coarse_samples` directions (ties go to the
/// smallest index), then runs `refine_iters` rounds of golden-section line
/// searches over the two spherical angles of a frame centred on the best
/// grid point. A refinement step is kept only when it strictly improves the
/// objective, so `refined` is never worse than `coarse`.
SphereSearch sphere_search(const DirectionObjective& objective, Sense sense,
                           int coarse_samples, int refine_iters);

// (n.sigma) (x) I_dB with n normalized; throws on the zero vector.
Observable observable_from_direction(const Vec3& n, int dim_b);

double oracle_uin(const BipartiteState& rho, int coarse_samples = kDefaultCoarseSamples,
                  int refine_iters = kDefaultRefineIters);
double oracle_muin(const BipartiteState& rho, int coarse_samples = kDefaultCoarseSamples,
                   int refine_iters = kDefaultRefineIters);
double oracle_lqu(const BipartiteState& rho, int coarse_samples = kDefaultCoarseSamples,
                  int refine_iters = kDefaultRefineIters);

// ||rho - Pi(rho)||_F^2 for the projective measurement {(I +- n.sigma)/2} on A.
double measurement_disturbance(const BipartiteState& rho, const Vec3& n);

/// Largest Hilbert-Schmidt disturbance over projective measurements on A
/// that leave rho_a unchanged. For r != 0 the basis is forced to +-r/|r|;
/// for r = 0 every basis qualifies and the sphere is searched.
double oracle_min_hs(const BipartiteState& rho, int measurement_samples = kDefaultCoarseSamples,
                     int refine_iters = kDefaultRefineIters);

}  // namespace skewcorr::oracle
