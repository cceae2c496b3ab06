#pragma once

#include "papa/types.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace papa {

/// One generated point with the parameters that produced it, kept so tests
/// can compare recovered coordinates against ground truth.
struct LabeledSample {
  Vector point;
  Vector params;
  double noise_sigma = 0.0;
};

struct GeneratedDataset {
  PointCloud cloud;
  std::vector<LabeledSample> samples;
};

/// Noiseless generating maps, exposed so oracles can rebuild the exact
/// pre-noise position from a sample's stored parameters.
Vector zigzag_point(double t);                            // t in [0, 4]
Vector boomerang_point(int component, double t);          // t in [0, 1]
Vector swiss_roll_point(double t, double y, double scale);

/// Vertices of the generating polyline: four unit segments joined at right
/// angles, starting at the origin.
std::vector<Vector> zigzag_vertices();

/// Points sampled uniformly along the zigzag polyline with isotropic
/// Gaussian noise; params hold the arc-length parameter t.
GeneratedDataset gen_zigzag(int n, double noise_sigma, std::uint64_t seed);

/// Two circular arcs of radius 1 spanning 150 degrees, opening toward each
/// other with centers 2.5 apart; params hold (component, arc parameter t).
GeneratedDataset gen_boomerang(int n, double noise_sigma, std::uint64_t seed);

/// The classic roll (t cos t, y, t sin t) scaled by `scale`, t uniform on
/// [1.5pi, 4.5pi], y uniform on [0, 10]; params hold (t, y). The default
/// scale of 0.1 puts the inter-layer gap near 0.63.
GeneratedDataset gen_swiss_roll(int n, double noise_sigma, std::uint64_t seed,
                                double scale = 0.1);

/// Reads a delimited numeric table; an optional 0-based column is split off
/// as row labels. Parse errors report the offending line.
PointCloud load_delimited(const std::filesystem::path& path,
                          char delimiter = ',', bool has_header = false,
                          std::optional<int> label_column = std::nullopt);

}  // namespace papa
