#pragma once

#include "papa/local_frame.hpp"
#include "papa/neighbors.hpp"
#include "papa/types.hpp"

#include <optional>
#include <vector>

namespace papa {

struct TraceConfig {
  double step = 0.01;
  int max_steps_each_way = 200;
  NeighborhoodSpec spec;
  double tie_threshold = 0.05;
  // Overshoot past the data ends is the documented behavior, so traces keep
  // going through near-isotropic patches unless this is switched on.
  bool stop_on_isotropy = false;

  void validate() const;  // throws ValidationError
};

/// Integrates the autoparallel through seed in both directions: repeated
/// steps x + h*d with d re-estimated each step against the previous
/// direction. States are ordered by arc length with the seed at arc 0;
/// seed_reference, when given, fixes the orientation of the seed direction.
/// Throws LostSupportError if the seed itself has no support.
AutoparallelTrace trace_autoparallel(
    const SpatialIndex& index, const Vector& seed, const TraceConfig& config,
    int seed_index = -1,
    const std::optional<Vector>& seed_reference = std::nullopt);

/// Euclidean image of the trace: the straight line through the seed along
/// the seed direction, with each state mapped to its own arc length. At one
/// pipeline level only the first frame vector is known, so this is the
/// signed arc-length chart of the fiber.
std::vector<Vector> nonholonomic_map(const AutoparallelTrace& trace);

struct LoopDefect {
  Vector defect;      // endpoint of walk A minus endpoint of walk B
  double norm = 0.0;
};

/// Non-closure of the discrete parallelogram spanned by the top two local
/// principal directions: walk epsilon along the first then the second
/// direction, and in the opposite order, and compare endpoints. At each
/// corner the continued direction is the top-two frame vector best aligned
/// with the origin's, so eigenvalue-order swaps between nearby frames do
/// not register as defect. Throws DegenerateDirectionError when the second
/// direction carries no variance (lambda2 < tie_threshold * lambda1) and
/// LostSupportError if any visited corner lacks support.
LoopDefect loop_defect(const SpatialIndex& index, const Vector& origin,
                       const NeighborhoodSpec& spec, double epsilon,
                       double tie_threshold = 0.05);

}  // namespace papa
