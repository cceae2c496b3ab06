#pragma once

#include "papa/types.hpp"

#include <cstdint>
#include <vector>

namespace papa {

struct Neighbor {
  int index;
  double distance;
};

/// Exact fixed-radius search over an immutable cloud, backed by a kd-tree.
/// Queries from multiple threads are safe once construction has finished.
class SpatialIndex {
 public:
  explicit SpatialIndex(PointCloud cloud);

  /// All points with Euclidean distance <= radius from center, ascending by
  /// distance with ties broken by point index. Membership is decided on
  /// squared distances, so results match a brute-force scan bit for bit.
  std::vector<Neighbor> radius_query(const Eigen::Ref<const Vector>& center,
                                     double radius) const;

  const PointCloud& cloud() const { return cloud_; }
  int size() const { return cloud_.size(); }
  int dimension() const { return cloud_.dimension(); }

 private:
  struct Node {
    int left = -1;
    int right = -1;
    int begin = 0;   // range into order_ for leaves
    int end = 0;
    int axis = -1;   // -1 marks a leaf
    double split = 0.0;
  };

  int build(int begin, int end, int depth);

  PointCloud cloud_;
  std::vector<int> order_;  // point indices, partitioned by the tree
  std::vector<Node> nodes_;
  int root_ = -1;
};

struct DistanceHistogram {
  std::vector<double> bin_edges;       // uniform width, starts at 0
  std::vector<std::int64_t> counts;    // one fewer than bin_edges
  int origin_index = 0;
};

/// Histogram of distances from one datapoint to the other N-1. The first bin
/// is closed at 0 and every bin is closed on the right, so coincident points
/// land in bin 0 and the maximum distance lands in the last bin.
DistanceHistogram distance_histogram(const PointCloud& cloud, int origin_index,
                                     double bin_width);

/// Neighborhood radius read off the histogram: the right edge of the last
/// bin before the first gap (an empty bin with data on both sides); failing
/// that, the left edge of the first local minimum of a 3-bin moving average;
/// failing that, the right edge of the bin holding the median distance.
/// Trailing empty bins are ignored throughout.
double estimate_radius(const DistanceHistogram& hist);

}  // namespace papa
