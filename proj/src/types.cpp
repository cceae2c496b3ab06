#include "papa/types.hpp"

#include "papa/errors.hpp"

#include <cmath>
#include <utility>

namespace papa {

PointCloud::PointCloud(RowMatrix points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (points_.rows() == 0 || points_.cols() == 0) {
    throw ValidationError("point cloud must have at least one point and one dimension");
  }
  for (Eigen::Index i = 0; i < points_.rows(); ++i) {
    for (Eigen::Index j = 0; j < points_.cols(); ++j) {
      if (!std::isfinite(points_(i, j))) {
        throw ValidationError("non-finite coordinate at row " + std::to_string(i) +
                              ", column " + std::to_string(j));
      }
    }
  }
  if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != points_.rows()) {
    throw ValidationError("label count does not match point count");
  }
}

PointCloud validate_cloud(const std::vector<std::vector<double>>& table,
                          std::vector<std::string> labels) {
  if (table.empty()) {
    throw ValidationError("empty table");
  }
  const std::size_t width = table.front().size();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].size() != width) {
      throw ValidationError("ragged row " + std::to_string(i) + ": expected " +
                            std::to_string(width) + " columns, got " +
                            std::to_string(table[i].size()));
    }
  }
  RowMatrix points(table.size(), width);
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = table[i][j];
    }
  }
  return PointCloud(std::move(points), std::move(labels));
}

void NeighborhoodSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ValidationError("neighborhood radius must be positive");
  }
  if (min_neighbors < 2) {
    throw ValidationError("min_neighbors must be at least 2");
  }
  if (max_neighbors && *max_neighbors < min_neighbors) {
    throw ValidationError("max_neighbors must be at least min_neighbors");
  }
}

void check_invariants(const FrameEstimate& frame, int min_neighbors) {
  if (frame.support < min_neighbors) {
    throw ValidationError("frame support below the required minimum");
  }
  const double norm = frame.direction.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw ValidationError("frame direction is not unit length");
  }
  for (Eigen::Index i = 0; i + 1 < frame.spectrum.size(); ++i) {
    if (frame.spectrum[i] < frame.spectrum[i + 1]) {
      throw ValidationError("frame spectrum is not sorted non-increasing");
    }
  }
  if (frame.spectrum.size() > 0 && frame.spectrum[frame.spectrum.size() - 1] < 0.0) {
    throw ValidationError("frame spectrum has a negative eigenvalue");
  }
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::max_steps: return "max_steps";
    case Termination::lost_support: return "lost_support";
    case Termination::isotropic: return "isotropic";
  }
  return "unknown";
}

void check_invariants(const AutoparallelTrace& trace) {
  if (trace.states.empty()) {
    throw ValidationError("trace has no states");
  }
  if (trace.seed_state < 0 ||
      trace.seed_state >= static_cast<int>(trace.states.size())) {
    throw ValidationError("trace seed_state out of range");
  }
  if (trace.states[trace.seed_state].arc_length != 0.0) {
    throw ValidationError("seed state must sit at arc length 0");
  }
  const double h = trace.step;
  for (std::size_t k = 0; k + 1 < trace.states.size(); ++k) {
    const TraceState& a = trace.states[k];
    const TraceState& b = trace.states[k + 1];
    if (std::abs((b.position - a.position).norm() - h) > 1e-9) {
      throw ValidationError("consecutive states are not one step apart");
    }
    if (a.direction.dot(b.direction) < 0.0) {
      throw ValidationError("direction sign flips between consecutive states");
    }
    const int ka = static_cast<int>(k) - trace.seed_state;
    if (a.arc_length != ka * h || b.arc_length != (ka + 1) * h) {
      throw ValidationError("arc length is not an exact step multiple");
    }
  }
}

BaseSpace::BaseSpace(Vector anchor, Vector normal) : anchor_(std::move(anchor)) {
  if (anchor_.size() != normal.size()) {
    throw ValidationError("anchor and normal dimensions differ");
  }
  const double norm = normal.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ValidationError("base-space normal must be nonzero");
  }
  normal_ = normal / norm;
}

void check_invariants(const FiberProjection& projection, const BaseSpace& base,
                      double tolerance) {
  if (projection.point_index < 0) {
    throw ValidationError("fiber projection has no source point");
  }
  if (std::abs(base.offset(projection.intersection)) > tolerance) {
    throw ValidationError("fiber intersection is off the base space");
  }
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::requested_levels_reached: return "requested_levels_reached";
    case StopReason::isotropic_data: return "isotropic_data";
    case StopReason::insufficient_support: return "insufficient_support";
  }
  return "unknown";
}

}  // namespace papa
