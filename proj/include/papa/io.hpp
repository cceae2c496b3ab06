#pragma once

#include "papa/neighbors.hpp"
#include "papa/projection.hpp"
#include "papa/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace papa {

/// Decimal form of x with 17 significant digits, enough to round-trip any
/// double exactly; used for every float that leaves the process.
std::string format_double(double x);

void write_cloud_csv(const std::filesystem::path& path, const PointCloud& cloud);

void write_params_csv(const std::filesystem::path& path,
                      const std::vector<Vector>& params);

void write_histogram_csv(const std::filesystem::path& path,
                         const DistanceHistogram& hist);

/// One row per state: trace_id, step_index, arc_length, positions,
/// directions, termination. Rows on each side carry that side's
/// termination reason; the seed row says "seed".
void write_traces_csv(const std::filesystem::path& path,
                      const std::vector<AutoparallelTrace>& traces);

void write_projection_csv(const std::filesystem::path& path,
                          const std::vector<FiberProjection>& projections);

/// Values-only single-column CSV with a header, used for coordinate dumps.
void write_column_csv(const std::filesystem::path& path,
                      const std::string& header,
                      const std::vector<double>& values);

/// Model directory layout: level_<k>/ holding base.json, coordinates.csv and
/// residual.csv per level, plus manifest.json at the root echoing the run
/// configuration.
void save_model(const std::filesystem::path& directory, const PapaModel& model,
                const std::string& config_echo_json);

}  // namespace papa
