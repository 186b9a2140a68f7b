#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "skewcorr/linalg.hpp"
#include "skewcorr/state.hpp"

namespace skewcorr {

/// Kraus representation of a CPTP map. Construction checks that all
/// operators share one square dimension and that sum_k E_k^dagger E_k = I
/// within 1e-10 (Frobenius).
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators);

  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  int dim() const noexcept { return static_cast<int>(operators_.front().rows()); }

 private:
  std::vector<ComplexMatrix> operators_;
};

// E0 = |0><0| + sqrt(1-g)|1><1|, E1 = sqrt(g)|0><1|.
KrausChannel amplitude_damping(double gamma);
// E0 = diag(1, sqrt(1-l)), E1 = diag(0, sqrt(l)).
KrausChannel phase_damping(double lambda);
// {sqrt(1-3p/4) I, sqrt(p/4) sigma_x, sqrt(p/4) sigma_y, sqrt(p/4) sigma_z}.
KrausChannel depolarizing(double p);

using ChannelFamily = std::function<KrausChannel(double)>;

// "amplitude-damping", "phase-damping", "depolarizing".
ChannelFamily channel_family(std::string_view name);

/// sum_k (I (x) E_k) rho (I (x) E_k)^dagger.
BipartiteState apply_channel_b(const BipartiteState& rho, const KrausChannel& channel);

enum class Measure { kUin, kMuin, kLqu, kMinHs };

Measure parse_measure(std::string_view label);
std::string_view measure_label(Measure m);
double evaluate(Measure m, const BipartiteState& rho);

struct SweepSeries {
  std::vector<double> grid;
  std::vector<std::string> labels;
  // values[l][g]: measure labels[l] at grid point g.
  std::vector<std::vector<double>> values;

  const std::vector<double>& series(std::string_view label) const;
};

// `points` uniform values on [0, 1]; a single point gives {0}.
std::vector<double> uniform_grid(int points);

/// Evaluates each labelled measure on family(p)(rho) for every p in `grid`.
/// The grid must be strictly ascending inside [0, 1]; unknown labels throw
/// ValidationError("measure").
SweepSeries sweep(const BipartiteState& rho, const ChannelFamily& family,
                  const std::vector<double>& grid, const std::vector<std::string>& labels);

}  // namespace skewcorr
