#include "papa/datasets.hpp"

#include "papa/errors.hpp"
#include "papa/rng.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

namespace papa {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// Boomerang geometry: unit-radius arcs spanning 150 degrees whose convex
// apexes face each other across a 0.5 gap, centers 2.5 apart on the x-axis.
constexpr double kBoomerangSpan = 150.0 * kDeg;
const double kBoomerangStart[2] = {-75.0 * kDeg, 105.0 * kDeg};
const double kBoomerangCenterX[2] = {0.0, 2.5};

GeneratedDataset assemble(std::vector<LabeledSample> samples) {
  RowMatrix points(samples.size(), samples.front().point.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    points.row(static_cast<Eigen::Index>(i)) = samples[i].point;
  }
  return GeneratedDataset{PointCloud(std::move(points)), std::move(samples)};
}

Vector add_noise(const Vector& base, double sigma, SplitRng& rng) {
  if (sigma == 0.0) return base;
  Vector noisy = base;
  for (Eigen::Index j = 0; j < noisy.size(); ++j) {
    noisy[j] += sigma * rng.normal();
  }
  return noisy;
}

void check_generator_args(int n, double noise_sigma) {
  if (n < 1) {
    throw ValidationError("generator needs at least one point");
  }
  if (noise_sigma < 0.0 || !std::isfinite(noise_sigma)) {
    throw ValidationError("noise sigma must be non-negative");
  }
}

}  // namespace

std::vector<Vector> zigzag_vertices() {
  // Four unit segments meeting at right angles: headings alternate between
  // +45 and -45 degrees.
  const double half = std::numbers::sqrt2 / 2.0;
  std::vector<Vector> vertices(5, Vector::Zero(2));
  for (int k = 1; k <= 4; ++k) {
    vertices[k] = vertices[k - 1];
    vertices[k][0] += half;
    vertices[k][1] += (k % 2 == 1) ? half : -half;
  }
  return vertices;
}

Vector zigzag_point(double t) {
  if (t < 0.0 || t > 4.0) {
    throw ValidationError("zigzag parameter must lie in [0, 4]");
  }
  static const std::vector<Vector> vertices = zigzag_vertices();
  const int k = std::min(3, static_cast<int>(t));
  const double local = t - k;
  return vertices[k] + local * (vertices[k + 1] - vertices[k]);
}

Vector boomerang_point(int component, double t) {
  if (component != 0 && component != 1) {
    throw ValidationError("boomerang component must be 0 or 1");
  }
  if (t < 0.0 || t > 1.0) {
    throw ValidationError("boomerang parameter must lie in [0, 1]");
  }
  const double theta = kBoomerangStart[component] + t * kBoomerangSpan;
  Vector p(2);
  p[0] = kBoomerangCenterX[component] + std::cos(theta);
  p[1] = std::sin(theta);
  return p;
}

Vector swiss_roll_point(double t, double y, double scale) {
  Vector p(3);
  p[0] = scale * t * std::cos(t);
  p[1] = scale * y;
  p[2] = scale * t * std::sin(t);
  return p;
}

GeneratedDataset gen_zigzag(int n, double noise_sigma, std::uint64_t seed) {
  check_generator_args(n, noise_sigma);
  SplitRng rng(seed);
  std::vector<LabeledSample> samples;
  samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = rng.uniform(0.0, 4.0);
    Vector params(1);
    params[0] = t;
    samples.push_back(LabeledSample{add_noise(zigzag_point(t), noise_sigma, rng),
                                    std::move(params), noise_sigma});
  }
  return assemble(std::move(samples));
}

GeneratedDataset gen_boomerang(int n, double noise_sigma, std::uint64_t seed) {
  check_generator_args(n, noise_sigma);
  SplitRng rng(seed);
  std::vector<LabeledSample> samples;
  samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int component = rng.uniform_index(2);
    const double t = rng.uniform(0.0, 1.0);
    Vector params(2);
    params[0] = component;
    params[1] = t;
    samples.push_back(
        LabeledSample{add_noise(boomerang_point(component, t), noise_sigma, rng),
                      std::move(params), noise_sigma});
  }
  return assemble(std::move(samples));
}

GeneratedDataset gen_swiss_roll(int n, double noise_sigma, std::uint64_t seed,
                                double scale) {
  check_generator_args(n, noise_sigma);
  if (!(scale > 0.0)) {
    throw ValidationError("swiss roll scale must be positive");
  }
  SplitRng rng(seed);
  std::vector<LabeledSample> samples;
  samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = rng.uniform(1.5 * std::numbers::pi, 4.5 * std::numbers::pi);
    const double y = rng.uniform(0.0, 10.0);
    Vector params(2);
    params[0] = t;
    params[1] = y;
    samples.push_back(
        LabeledSample{add_noise(swiss_roll_point(t, y, scale), noise_sigma, rng),
                      std::move(params), noise_sigma});
  }
  return assemble(std::move(samples));
}

PointCloud load_delimited(const std::filesystem::path& path, char delimiter,
                          bool has_header, std::optional<int> label_column) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }

  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 && has_header) continue;
    if (line.empty()) continue;

    std::vector<double> row;
    std::string cell;
    std::stringstream cells(line);
    int column = 0;
    while (std::getline(cells, cell, delimiter)) {
      // Trim surrounding spaces so " 1.5" parses.
      const std::size_t first = cell.find_first_not_of(" \t");
      const std::size_t last = cell.find_last_not_of(" \t");
      cell = (first == std::string::npos) ? "" : cell.substr(first, last - first + 1);
      if (label_column && column == *label_column) {
        labels.push_back(cell);
      } else {
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (ec != std::errc() || ptr != cell.data() + cell.size()) {
          throw ValidationError("line " + std::to_string(line_number) +
                                ": cannot parse '" + cell + "' as a number");
        }
        row.push_back(value);
      }
      ++column;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ValidationError(path.string() + " holds no data rows");
  }
  return validate_cloud(rows, std::move(labels));
}

}  // namespace papa
