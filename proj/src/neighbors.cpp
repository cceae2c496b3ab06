#include "papa/neighbors.hpp"

#include "papa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace papa {

namespace {

constexpr int kLeafSize = 16;

}  // namespace

SpatialIndex::SpatialIndex(PointCloud cloud) : cloud_(std::move(cloud)) {
  order_.resize(cloud_.size());
  std::iota(order_.begin(), order_.end(), 0);
  nodes_.reserve(static_cast<std::size_t>(2 * cloud_.size() / kLeafSize + 8));
  root_ = build(0, cloud_.size(), 0);
}

int SpatialIndex::build(int begin, int end, int depth) {
  Node node;
  node.begin = begin;
  node.end = end;
  if (end - begin <= kLeafSize) {
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }
  const int axis = depth % cloud_.dimension();
  const int mid = begin + (end - begin) / 2;
  const RowMatrix& pts = cloud_.points();
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end, [&](int a, int b) {
                     const double va = pts(a, axis);
                     const double vb = pts(b, axis);
                     return va < vb || (va == vb && a < b);
                   });
  node.axis = axis;
  node.split = pts(order_[mid], axis);
  const int self = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  const int left = build(begin, mid, depth + 1);
  const int right = build(mid, end, depth + 1);
  nodes_[self].left = left;
  nodes_[self].right = right;
  return self;
}

std::vector<Neighbor> SpatialIndex::radius_query(
    const Eigen::Ref<const Vector>& center, double radius) const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ValidationError("query radius must be positive");
  }
  if (center.size() != cloud_.dimension()) {
    throw ValidationError("query center dimension does not match the cloud");
  }
  const double radius_sq = radius * radius;
  const RowMatrix& pts = cloud_.points();

  std::vector<std::pair<double, int>> hits;  // (squared distance, index)
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (node.axis < 0) {
      for (int i = node.begin; i < node.end; ++i) {
        const int idx = order_[i];
        const double d2 = (pts.row(idx).transpose() - center).squaredNorm();
        if (d2 <= radius_sq) {
          hits.emplace_back(d2, idx);
        }
      }
      continue;
    }
    // Children hold coordinates <= split (left) and >= split (right); a
    // subtree is skipped only when the gap along the axis already exceeds
    // the radius, so boundary points are never lost.
    const double gap = center[node.axis] - node.split;
    if (!(gap > radius)) {
      stack.push_back(node.left);
    }
    if (!(-gap > radius)) {
      stack.push_back(node.right);
    }
  }

  std::vector<Neighbor> result;
  result.reserve(hits.size());
  for (const auto& [d2, idx] : hits) {
    result.push_back(Neighbor{idx, std::sqrt(d2)});
  }
  // Sorted on the rounded distance, not the squared one, since that is what
  // callers see; ties fall back to the index.
  std::sort(result.begin(), result.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
  });
  return result;
}

DistanceHistogram distance_histogram(const PointCloud& cloud, int origin_index,
                                     double bin_width) {
  if (origin_index < 0 || origin_index >= cloud.size()) {
    throw ValidationError("histogram origin index out of range");
  }
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw ValidationError("histogram bin width must be positive");
  }
  if (cloud.size() < 2) {
    throw ValidationError("distance histogram needs at least two points");
  }
  const RowMatrix& pts = cloud.points();
  const Vector origin = cloud.point(origin_index);

  std::vector<double> distances;
  distances.reserve(cloud.size() - 1);
  double max_distance = 0.0;
  for (int i = 0; i < cloud.size(); ++i) {
    if (i == origin_index) continue;
    const double d = std::sqrt((pts.row(i).transpose() - origin).squaredNorm());
    distances.push_back(d);
    max_distance = std::max(max_distance, d);
  }

  const int bins = std::max(1, static_cast<int>(std::ceil(max_distance / bin_width)));
  DistanceHistogram hist;
  hist.origin_index = origin_index;
  hist.bin_edges.resize(bins + 1);
  for (int k = 0; k <= bins; ++k) {
    hist.bin_edges[k] = k * bin_width;
  }
  hist.counts.assign(bins, 0);
  for (double d : distances) {
    // Bins are right-closed: bin k covers (edges[k], edges[k+1]], with the
    // first bin additionally closed at 0. Start from a division guess and
    // settle against the actual edges so both routes agree bit for bit.
    int k = std::clamp(static_cast<int>(std::ceil(d / bin_width)) - 1, 0, bins - 1);
    while (k > 0 && d <= hist.bin_edges[k]) --k;
    while (k + 1 < bins && d > hist.bin_edges[k + 1]) ++k;
    ++hist.counts[k];
  }
  return hist;
}

double estimate_radius(const DistanceHistogram& hist) {
  int n = static_cast<int>(hist.counts.size());
  while (n > 0 && hist.counts[n - 1] == 0) --n;  // trailing empties carry no signal
  if (n == 0) {
    throw ValidationError("histogram has no mass");
  }
  int first_filled = 0;
  while (hist.counts[first_filled] == 0) ++first_filled;

  // A gap is an empty bin with data somewhere before and after it; after the
  // trim, any empty bin past the first filled one qualifies.
  for (int g = first_filled + 1; g < n; ++g) {
    if (hist.counts[g] == 0) {
      return hist.bin_edges[g];
    }
  }

  // No gap: look for the first dip in a 3-bin moving average.
  auto smooth = [&](int i) {
    return (static_cast<double>(hist.counts[i - 1]) + hist.counts[i] + hist.counts[i + 1]) / 3.0;
  };
  for (int i = 2; i <= n - 3; ++i) {
    if (smooth(i - 1) > smooth(i) && smooth(i) <= smooth(i + 1)) {
      return hist.bin_edges[i];
    }
  }

  // Still nothing: take the bin holding the median distance.
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) total += hist.counts[i];
  const std::int64_t half = (total + 1) / 2;
  std::int64_t seen = 0;
  for (int i = 0; i < n; ++i) {
    seen += hist.counts[i];
    if (seen >= half) {
      return hist.bin_edges[i + 1];
    }
  }
  return hist.bin_edges[n];  // unreachable: total > 0
}

}  // namespace papa
