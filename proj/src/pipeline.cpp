#include "papa/pipeline.hpp"

#include "papa/errors.hpp"
#include "papa/local_frame.hpp"
#include "papa/neighbors.hpp"
#include "papa/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace papa {

namespace {

double level_radius(const PointCloud& cloud, const PapaConfig& config, int level,
                    SplitRng& rng) {
  if (config.radius) return *config.radius;
  const int origin = rng.child("radius-origin-" + std::to_string(level))
                         .uniform_index(cloud.size());
  double max_distance = 0.0;
  for (int i = 0; i < cloud.size(); ++i) {
    max_distance = std::max(
        max_distance, (cloud.point(i) - cloud.point(origin)).norm());
  }
  if (max_distance <= 0.0) {
    throw ValidationError("cannot estimate a radius: all points coincide");
  }
  return estimate_radius(
      distance_histogram(cloud, origin, max_distance / config.histogram_bins));
}

}  // namespace

IsotropyResult isotropy_test(const PointCloud& cloud, const NeighborhoodSpec& spec,
                             int n_probes, std::uint64_t seed, double threshold) {
  if (n_probes < 10) {
    throw ValidationError("isotropy test needs at least 10 probes");
  }
  spec.validate();
  const SpatialIndex index(cloud);
  SplitRng rng(seed);

  std::vector<double> ratios;
  ratios.reserve(n_probes);
  int unsupported = 0;
  for (int p = 0; p < n_probes; ++p) {
    const int i = rng.uniform_index(cloud.size());
    try {
      const FrameEstimate frame = frame_at(index, cloud.point(i), spec);
      if (frame.spectrum.size() < 2 || frame.spectrum[1] <= 0.0) {
        ratios.push_back(std::numeric_limits<double>::infinity());
      } else {
        ratios.push_back(frame.spectrum[0] / frame.spectrum[1]);
      }
    } catch (const LostSupportError&) {
      ++unsupported;
    }
  }
  if (unsupported > n_probes / 2) {
    throw LostSupportError(n_probes - unsupported, n_probes / 2 + 1);
  }

  std::sort(ratios.begin(), ratios.end());
  const std::size_t m = ratios.size();
  const double statistic = (m % 2 == 1)
                               ? ratios[m / 2]
                               : 0.5 * (ratios[m / 2 - 1] + ratios[m / 2]);
  return IsotropyResult{statistic, statistic < threshold};
}

void PapaConfig::validate(int dimension) const {
  // The per-level radius always replaces trace.spec.radius, so the trace
  // config is checked with that substitution in place; a default-initialized
  // spec radius is fine here.
  TraceConfig effective = trace;
  effective.spec.radius = radius.value_or(1.0);
  effective.validate();
  if (levels && (*levels < 1 || *levels > dimension)) {
    throw ValidationError("levels must lie between 1 and the ambient dimension");
  }
  if (radius && !(*radius > 0.0)) {
    throw ValidationError("radius must be positive");
  }
  if (!(histogram_bins > 0.0)) {
    throw ValidationError("histogram_bins must be positive");
  }
  if (isotropy_probes < 10) {
    throw ValidationError("isotropy_probes must be at least 10");
  }
  if (!(isotropy_threshold > 1.0)) {
    throw ValidationError("isotropy threshold must exceed 1");
  }
}

PapaModel run_papa(const PointCloud& cloud, const PapaConfig& config) {
  config.validate(cloud.dimension());
  // A one-dimensional residual has no second direction to estimate, so the
  // effective level count is capped one short of the ambient dimension.
  const int max_levels =
      std::min(config.levels.value_or(cloud.dimension() - 1), cloud.dimension() - 1);
  SplitRng rng(config.seed);

  PapaModel model;
  model.stop_reason = StopReason::requested_levels_reached;
  PointCloud current = cloud;
  // Rows of `current` map back to these indices in the original cloud.
  std::vector<int> alive(cloud.size());
  std::iota(alive.begin(), alive.end(), 0);

  for (int level = 0; level < max_levels; ++level) {
    if (current.size() <= config.trace.spec.min_neighbors) {
      model.stop_reason = StopReason::insufficient_support;
      break;
    }

    TraceConfig trace_config = config.trace;
    trace_config.spec.radius = level_radius(current, config, level, rng);

    if (config.check_isotropy) {
      const IsotropyResult isotropy = isotropy_test(
          current, trace_config.spec, config.isotropy_probes,
          rng.child("isotropy-" + std::to_string(level)).next_u64(),
          config.isotropy_threshold);
      if (isotropy.is_isotropic) {
        model.stop_reason = StopReason::isotropic_data;
        break;
      }
    }

    const SpatialIndex index(current);
    const BaseStrategy strategy =
        level < static_cast<int>(config.base_strategies.size())
            ? config.base_strategies[level]
            : BaseStrategy{MedoidOrthogonal{}};

    BaseSpace base = [&] {
      if (std::holds_alternative<UserSupplied>(strategy)) {
        return choose_base_space(current, {}, strategy);
      }
      // Medoid strategy: orient the plane by the trace through the medoid
      // itself, whose seed state is the state nearest the anchor.
      const RowMatrix& pts = current.points();
      int medoid = 0;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < current.size(); ++i) {
        double sum = 0.0;
        for (int j = 0; j < current.size(); ++j) {
          sum += (pts.row(j) - pts.row(i)).norm();
        }
        if (sum < best) {
          best = sum;
          medoid = i;
        }
      }
      const AutoparallelTrace medoid_trace =
          trace_autoparallel(index, current.point(medoid), trace_config, medoid);
      return choose_base_space(current, {medoid_trace}, strategy);
    }();

    ProjectionResult projected = [&] {
      try {
        return project_all(index, base, trace_config);
      } catch (const NumericsError&) {
        if (level == 0) throw;
        return ProjectionResult{{}, PointCloud(RowMatrix::Zero(1, 1)), {}};
      }
    }();
    if (projected.projections.empty()) {
      model.stop_reason = StopReason::insufficient_support;
      break;
    }

    const Matrix chart = base_space_chart(base);
    PapaLevel record{base, chart, {}, {}, to_chart(base, chart, projected.residual)};
    record.point_indices.reserve(projected.projections.size());
    record.coordinates.reserve(projected.projections.size());
    std::vector<int> next_alive;
    next_alive.reserve(projected.projections.size());
    for (const FiberProjection& projection : projected.projections) {
      record.point_indices.push_back(alive[projection.point_index]);
      record.coordinates.push_back(projection.signed_distance);
      next_alive.push_back(alive[projection.point_index]);
    }
    PointCloud residual = record.residual;
    model.levels.push_back(std::move(record));
    current = std::move(residual);
    alive = std::move(next_alive);
  }
  return model;
}

}  // namespace papa
