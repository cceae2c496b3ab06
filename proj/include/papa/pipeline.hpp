#pragma once

#include "papa/projection.hpp"
#include "papa/tracer.hpp"
#include "papa/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace papa {

struct IsotropyResult {
  double statistic = 0.0;  // median lambda1/lambda2 over the probes
  bool is_isotropic = false;
};

/// Probes n_probes random datapoints and reports whether local spectra show
/// a preferred direction. Throws LostSupportError when more than half the
/// probes lack support.
IsotropyResult isotropy_test(const PointCloud& cloud,
                             const NeighborhoodSpec& spec, int n_probes,
                             std::uint64_t seed, double threshold = 1.5);

struct PapaConfig {
  TraceConfig trace;
  // Requested level count; unset means auto, which peels until dimension 1
  // or the isotropy stop fires. Both modes cap at D-1 levels.
  std::optional<int> levels;
  // Per-level base-space choices; levels beyond the list use the medoid
  // strategy.
  std::vector<BaseStrategy> base_strategies;
  // Fixed neighborhood radius; unset re-estimates from the distance
  // histogram of each level's cloud.
  std::optional<double> radius;
  double histogram_bins = 50;  // bin width = max distance / histogram_bins
  bool check_isotropy = true;
  double isotropy_threshold = 1.5;
  int isotropy_probes = 50;
  std::uint64_t seed = 0;

  void validate(int dimension) const;  // throws ValidationError
};

/// The full analysis: per level, estimate the radius, check isotropy, trace
/// every point's autoparallel, project onto the chosen base space, and
/// recurse on the residual chart cloud. Fully deterministic for a fixed
/// config.
PapaModel run_papa(const PointCloud& cloud, const PapaConfig& config);

}  // namespace papa
