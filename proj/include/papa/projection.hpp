#pragma once

#include "papa/tracer.hpp"
#include "papa/types.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace papa {

struct PlaneCrossing {
  Vector intersection;
  double signed_arc = 0.0;  // arc-length coordinate of the crossing,
                            // measured from the trace's seed state
};

/// Linear-interpolation intersections of a trace with a base space, sorted
/// by |signed_arc|. A state lying exactly on the plane counts as one
/// crossing at that state, emitted once per on-plane run.
std::vector<PlaneCrossing> plane_crossings(const AutoparallelTrace& trace,
                                           const BaseSpace& base);

/// Traces the autoparallel through datapoint point_index and projects it to
/// the crossing of minimum |signed_arc|. Throws NoIntersectionError (with
/// both termination reasons) when the trace never meets the base space.
FiberProjection project_point(
    const SpatialIndex& index, int point_index, const BaseSpace& base,
    const TraceConfig& config,
    const std::optional<Vector>& seed_reference = std::nullopt);

struct MedoidOrthogonal {};

struct UserSupplied {
  Vector anchor;
  Vector normal;
};

using BaseStrategy = std::variant<MedoidOrthogonal, UserSupplied>;

/// Base space through the medoid datapoint, normal to the mean trace
/// direction there (per-trace directions taken at the state nearest the
/// medoid, sign-aligned before averaging), or the user's plane verbatim.
/// Throws DegenerateDirectionError when the aligned directions cancel.
BaseSpace choose_base_space(const PointCloud& cloud,
                            const std::vector<AutoparallelTrace>& traces,
                            const BaseStrategy& strategy);

/// Deterministic orthonormal basis of the base space itself: D x (D-1)
/// columns completing the normal, via a Householder reflection.
Matrix base_space_chart(const BaseSpace& base);

/// Re-expresses ambient points lying (near) the base space in the chart's
/// D-1 coordinates.
PointCloud to_chart(const BaseSpace& base, const Matrix& chart,
                    const PointCloud& ambient);

struct ProjectionResult {
  std::vector<FiberProjection> projections;  // survivors, ascending index
  PointCloud residual;                       // their intersections, ambient
  std::vector<int> failures;                 // indices with no crossing
};

/// Projects every datapoint along its fiber onto the base space. Seed
/// directions are first made globally coherent by propagating orientation
/// over the radius neighbor graph, so signed coordinates are comparable
/// across points. Points whose traces miss the plane are reported, not
/// fatal; throws NumericsError only if every point fails.
ProjectionResult project_all(const SpatialIndex& index, const BaseSpace& base,
                             const TraceConfig& config);

}  // namespace papa
