#include "papa/projection.hpp"

#include "papa/errors.hpp"
#include "papa/local_frame.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <thread>
#include <utility>

namespace papa {

namespace {

// Runs fn(i) for i in [0, n) across hardware threads. Each index is handled
// exactly once; fn must only touch its own slot of any shared output.
void parallel_for(int n, const std::function<void(int)>& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<unsigned>(hw, 16));
  if (n <= 1 || workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

std::vector<PlaneCrossing> plane_crossings(const AutoparallelTrace& trace,
                                           const BaseSpace& base) {
  const std::size_t n = trace.states.size();
  if (n == 0) {
    throw ValidationError("cannot intersect an empty trace");
  }
  std::vector<double> offsets(n);
  for (std::size_t k = 0; k < n; ++k) {
    offsets[k] = base.offset(trace.states[k].position);
  }

  std::vector<PlaneCrossing> crossings;
  // States sitting exactly on the plane count once per on-plane run.
  for (std::size_t k = 0; k < n; ++k) {
    if (offsets[k] == 0.0 && (k == 0 || offsets[k - 1] != 0.0)) {
      crossings.push_back(PlaneCrossing{trace.states[k].position,
                                        trace.states[k].arc_length});
    }
  }
  // Strict sign changes interpolate between the two states.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double a = offsets[k];
    const double b = offsets[k + 1];
    if (a != 0.0 && b != 0.0 && (a < 0.0) != (b < 0.0)) {
      const double t = a / (a - b);
      const TraceState& sa = trace.states[k];
      const TraceState& sb = trace.states[k + 1];
      crossings.push_back(PlaneCrossing{
          sa.position + t * (sb.position - sa.position),
          sa.arc_length + t * trace.step});
    }
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const PlaneCrossing& x, const PlaneCrossing& y) {
              const double ax = std::abs(x.signed_arc);
              const double ay = std::abs(y.signed_arc);
              return ax < ay || (ax == ay && x.signed_arc < y.signed_arc);
            });
  return crossings;
}

FiberProjection project_point(const SpatialIndex& index, int point_index,
                              const BaseSpace& base, const TraceConfig& config,
                              const std::optional<Vector>& seed_reference) {
  if (point_index < 0 || point_index >= index.size()) {
    throw ValidationError("projection point index out of range");
  }
  const AutoparallelTrace trace = trace_autoparallel(
      index, index.cloud().point(point_index), config, point_index, seed_reference);
  const std::vector<PlaneCrossing> crossings = plane_crossings(trace, base);
  if (crossings.empty()) {
    throw NoIntersectionError(
        "fiber through point " + std::to_string(point_index) +
            " never meets the base space",
        to_string(trace.forward_termination), to_string(trace.backward_termination));
  }
  return FiberProjection{point_index, crossings.front().intersection,
                         crossings.front().signed_arc};
}

BaseSpace choose_base_space(const PointCloud& cloud,
                            const std::vector<AutoparallelTrace>& traces,
                            const BaseStrategy& strategy) {
  if (const auto* user = std::get_if<UserSupplied>(&strategy)) {
    return BaseSpace(user->anchor, user->normal);
  }
  if (traces.empty()) {
    throw ValidationError("medoid base strategy needs at least one trace");
  }

  // Medoid: the datapoint with minimum summed distance to all others, ties
  // to the lower index.
  const RowMatrix& pts = cloud.points();
  int medoid = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cloud.size(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < cloud.size(); ++j) {
      sum += (pts.row(j) - pts.row(i)).norm();
    }
    if (sum < best) {
      best = sum;
      medoid = i;
    }
  }
  const Vector anchor = cloud.point(medoid);

  // Each trace votes with its direction at the state nearest the medoid;
  // votes are sign-aligned to the first before averaging, since fiber
  // orientation is conventional.
  Vector mean = Vector::Zero(cloud.dimension());
  bool have_reference = false;
  Vector reference;
  for (const AutoparallelTrace& trace : traces) {
    if (trace.states.empty()) continue;
    std::size_t nearest = 0;
    double nearest_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
      const double d2 = (trace.states[k].position - anchor).squaredNorm();
      if (d2 < nearest_d2) {
        nearest_d2 = d2;
        nearest = k;
      }
    }
    Vector direction = trace.states[nearest].direction;
    if (!have_reference) {
      reference = direction;
      have_reference = true;
    } else if (direction.dot(reference) < 0.0) {
      direction = -direction;
    }
    mean += direction;
  }
  if (!have_reference || mean.norm() < 1e-12) {
    throw DegenerateDirectionError(
        "trace directions cancel at the medoid; supply the base space explicitly");
  }
  return BaseSpace(anchor, mean);
}

Matrix base_space_chart(const BaseSpace& base) {
  const Eigen::Index d = base.dimension();
  // Householder reflector sending the normal onto the first axis; the
  // remaining columns then span the base space.
  Vector w = base.normal();
  w[0] += std::copysign(1.0, base.normal()[0]);
  Matrix h = Matrix::Identity(d, d) - (2.0 / w.squaredNorm()) * (w * w.transpose());
  return h.rightCols(d - 1);
}

PointCloud to_chart(const BaseSpace& base, const Matrix& chart,
                    const PointCloud& ambient) {
  if (chart.rows() != base.dimension() || chart.cols() != base.dimension() - 1) {
    throw ValidationError("chart shape does not match the base space");
  }
  RowMatrix coords(ambient.size(), chart.cols());
  for (int i = 0; i < ambient.size(); ++i) {
    coords.row(i) = ((ambient.point(i) - base.anchor()).transpose() * chart);
  }
  return PointCloud(std::move(coords), ambient.labels());
}

ProjectionResult project_all(const SpatialIndex& index, const BaseSpace& base,
                             const TraceConfig& config) {
  config.validate();
  const PointCloud& cloud = index.cloud();
  const int n = cloud.size();

  // Natural per-point frame directions; points without support fail here.
  std::vector<std::optional<Vector>> directions(n);
  std::vector<std::vector<int>> neighbor_lists(n);
  parallel_for(n, [&](int i) {
    try {
      const std::vector<Neighbor> neighbors =
          index.radius_query(cloud.point(i), config.spec.radius);
      neighbor_lists[i].reserve(neighbors.size());
      for (const Neighbor& nb : neighbors) neighbor_lists[i].push_back(nb.index);
      directions[i] = frame_at(index, cloud.point(i), config.spec).direction;
    } catch (const LostSupportError&) {
      directions[i] = std::nullopt;
    }
  });

  // Signed coordinates are only comparable across points if the seed
  // directions agree on an orientation, so propagate one over the radius
  // graph, breadth-first from the lowest-index point of each component.
  std::vector<double> orientation(n, 0.0);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (!directions[root] || orientation[root] != 0.0) continue;
    orientation[root] = 1.0;
    queue.push_back(root);
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j : neighbor_lists[i]) {
        if (!directions[j] || orientation[j] != 0.0) continue;
        const double agreement = directions[i]->dot(*directions[j]);
        orientation[j] = (orientation[i] * agreement < 0.0) ? -1.0 : 1.0;
        queue.push_back(j);
      }
    }
  }

  struct Outcome {
    std::optional<FiberProjection> projection;
    bool lost_seed = false;
  };
  std::vector<Outcome> outcomes(n);
  parallel_for(n, [&](int i) {
    if (!directions[i]) {
      outcomes[i].lost_seed = true;
      return;
    }
    try {
      outcomes[i].projection = project_point(index, i, base, config,
                                             orientation[i] * (*directions[i]));
    } catch (const NoIntersectionError&) {
    } catch (const LostSupportError&) {
      outcomes[i].lost_seed = true;
    }
  });

  std::vector<FiberProjection> projections;
  std::vector<int> failures;
  for (int i = 0; i < n; ++i) {
    if (outcomes[i].projection) {
      projections.push_back(std::move(*outcomes[i].projection));
    } else {
      failures.push_back(i);
    }
  }
  if (projections.empty()) {
    throw NumericsError("no point's fiber reaches the base space");
  }
  RowMatrix residual(projections.size(), cloud.dimension());
  for (std::size_t k = 0; k < projections.size(); ++k) {
    residual.row(static_cast<Eigen::Index>(k)) = projections[k].intersection;
  }
  return ProjectionResult{std::move(projections), PointCloud(std::move(residual)),
                          std::move(failures)};
}

}  // namespace papa
