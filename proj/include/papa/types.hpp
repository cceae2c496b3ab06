#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace papa {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
// Points are stored one per row; row-major keeps per-point access contiguous.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// N points in D ambient dimensions, immutable after construction.
/// Construction rejects empty data and non-finite coordinates, so a
/// PointCloud in hand is always valid and safe to share across threads.
class PointCloud {
 public:
  explicit PointCloud(RowMatrix points, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(points_.rows()); }
  int dimension() const { return static_cast<int>(points_.cols()); }
  Vector point(int i) const { return points_.row(i); }
  const RowMatrix& points() const { return points_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  RowMatrix points_;
  std::vector<std::string> labels_;
};

/// Builds a PointCloud from a raw numeric table, rejecting ragged rows,
/// non-finite values (identified by row/column) and empty tables.
PointCloud validate_cloud(const std::vector<std::vector<double>>& table,
                          std::vector<std::string> labels = {});

/// Radius + minimum-neighbor-count policy governing every local estimate.
struct NeighborhoodSpec {
  double radius = 0.0;
  int min_neighbors = 3;
  std::optional<int> max_neighbors;

  void validate() const;  // throws ValidationError
};

/// Local first principal direction with its eigenvalue spectrum.
struct FrameEstimate {
  Vector origin;
  Vector direction;  // unit
  Vector spectrum;   // sorted non-increasing, clamped at 0
  int support = 0;
};

void check_invariants(const FrameEstimate& frame, int min_neighbors);

enum class Termination { max_steps, lost_support, isotropic };

std::string to_string(Termination t);

struct TraceState {
  Vector position;
  Vector direction;  // unit, oriented along increasing arc length
  double arc_length = 0.0;
};

/// Ordered states of one bidirectionally integrated autoparallel.
/// Arc length increases by exactly the step between consecutive states and
/// is 0 at the seed state.
struct AutoparallelTrace {
  std::vector<TraceState> states;
  int seed_state = 0;   // index into states with arc_length == 0
  int seed_index = -1;  // originating datapoint, -1 if seeded off-cloud
  double step = 0.0;
  Termination forward_termination = Termination::max_steps;
  Termination backward_termination = Termination::max_steps;
};

void check_invariants(const AutoparallelTrace& trace);

/// Affine hyperplane given by an anchor point and a unit normal.
class BaseSpace {
 public:
  BaseSpace(Vector anchor, Vector normal);  // normalizes, rejects zero normal

  const Vector& anchor() const { return anchor_; }
  const Vector& normal() const { return normal_; }
  int dimension() const { return static_cast<int>(anchor_.size()); }

  /// Signed offset of x from the plane along the normal.
  double offset(const Eigen::Ref<const Vector>& x) const {
    return normal_.dot(x - anchor_);
  }

 private:
  Vector anchor_;
  Vector normal_;
};

/// Intersection of a datapoint's fiber with a base space, with the signed
/// arc-length coordinate measured along the fiber from the datapoint.
struct FiberProjection {
  int point_index = -1;
  Vector intersection;
  double signed_distance = 0.0;
};

void check_invariants(const FiberProjection& projection, const BaseSpace& base,
                      double tolerance);

enum class StopReason { requested_levels_reached, isotropic_data, insufficient_support };

std::string to_string(StopReason r);

/// One completed peeling level: the base space it projected onto, the fiber
/// coordinate of each surviving point, and the residual data the next level
/// consumed, expressed in the base space's orthonormal chart.
struct PapaLevel {
  BaseSpace base;
  Matrix chart;                    // D x (D-1) orthonormal columns spanning the base space
  std::vector<int> point_indices;  // original-cloud indices of surviving points
  std::vector<double> coordinates; // signed fiber coordinate per surviving point
  PointCloud residual;             // intersections in chart coordinates (dimension D-1)
};

struct PapaModel {
  std::vector<PapaLevel> levels;
  StopReason stop_reason = StopReason::requested_levels_reached;
};

}  // namespace papa
