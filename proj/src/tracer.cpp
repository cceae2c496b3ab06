#include "papa/tracer.hpp"

#include "papa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace papa {

namespace {

// Relative eigengap test: true when the top two eigenvalues are too close
// for the first principal direction to be trustworthy.
bool top_pair_tied(const Vector& spectrum, double tie_threshold) {
  if (spectrum.size() < 2) return false;
  if (spectrum[0] <= 0.0) return true;
  return (spectrum[0] - spectrum[1]) / spectrum[0] < tie_threshold;
}

struct Pass {
  std::vector<TraceState> states;  // excludes the seed state
  Termination termination = Termination::max_steps;
};

Pass integrate(const SpatialIndex& index, const Vector& seed,
               const Vector& initial_direction, const TraceConfig& config) {
  Pass pass;
  Vector position = seed;
  Vector direction = initial_direction;
  for (int k = 1; k <= config.max_steps_each_way; ++k) {
    Vector next = position + config.step * direction;
    FrameEstimate frame;
    try {
      frame = frame_at(index, next, config.spec, direction);
    } catch (const LostSupportError&) {
      pass.termination = Termination::lost_support;
      return pass;
    }
    if (config.stop_on_isotropy && top_pair_tied(frame.spectrum, config.tie_threshold)) {
      pass.termination = Termination::isotropic;
      return pass;
    }
    pass.states.push_back(TraceState{next, frame.direction, 0.0});
    position = std::move(next);
    direction = pass.states.back().direction;
  }
  pass.termination = Termination::max_steps;
  return pass;
}

}  // namespace

void TraceConfig::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ValidationError("trace step must be positive");
  }
  if (max_steps_each_way < 1) {
    throw ValidationError("max_steps_each_way must be at least 1");
  }
  if (!(tie_threshold > 0.0) || tie_threshold >= 1.0) {
    throw ValidationError("tie threshold must lie in (0, 1)");
  }
  spec.validate();
}

AutoparallelTrace trace_autoparallel(const SpatialIndex& index, const Vector& seed,
                                     const TraceConfig& config, int seed_index,
                                     const std::optional<Vector>& seed_reference) {
  config.validate();
  const FrameEstimate seed_frame = frame_at(index, seed, config.spec, seed_reference);

  AutoparallelTrace trace;
  trace.seed_index = seed_index;
  trace.step = config.step;

  if (config.stop_on_isotropy && top_pair_tied(seed_frame.spectrum, config.tie_threshold)) {
    trace.states.push_back(TraceState{seed, seed_frame.direction, 0.0});
    trace.seed_state = 0;
    trace.forward_termination = Termination::isotropic;
    trace.backward_termination = Termination::isotropic;
    return trace;
  }

  const Pass forward = integrate(index, seed, seed_frame.direction, config);
  const Pass backward = integrate(index, seed, -seed_frame.direction, config);

  // Backward states were integrated away from the seed; in the assembled
  // trace they run toward it, so their directions flip to keep every stored
  // direction pointing along increasing arc length.
  const int m = static_cast<int>(backward.states.size());
  trace.states.reserve(backward.states.size() + 1 + forward.states.size());
  for (int k = m - 1; k >= 0; --k) {
    trace.states.push_back(TraceState{backward.states[k].position,
                                      -backward.states[k].direction,
                                      -(k + 1) * config.step});
  }
  trace.states.push_back(TraceState{seed, seed_frame.direction, 0.0});
  for (std::size_t k = 0; k < forward.states.size(); ++k) {
    trace.states.push_back(TraceState{forward.states[k].position,
                                      forward.states[k].direction,
                                      static_cast<double>(k + 1) * config.step});
  }
  trace.seed_state = m;
  trace.forward_termination = forward.termination;
  trace.backward_termination = backward.termination;
  return trace;
}

std::vector<Vector> nonholonomic_map(const AutoparallelTrace& trace) {
  if (trace.states.empty()) {
    throw ValidationError("cannot map an empty trace");
  }
  const TraceState& seed = trace.states[trace.seed_state];
  std::vector<Vector> image;
  image.reserve(trace.states.size());
  for (const TraceState& state : trace.states) {
    image.push_back(seed.position + state.arc_length * seed.direction);
  }
  return image;
}

LoopDefect loop_defect(const SpatialIndex& index, const Vector& origin,
                       const NeighborhoodSpec& spec, double epsilon,
                       double tie_threshold) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("loop epsilon must be positive");
  }
  if (index.dimension() < 2) {
    throw ValidationError("loop defect needs at least two ambient dimensions");
  }

  auto basis_at = [&](const Vector& center) {
    return principal_directions(local_covariance(index, center, spec).covariance);
  };
  auto require_second = [&](const LocalBasis& basis, const char* where) {
    if (basis.spectrum[0] <= 0.0 ||
        basis.spectrum[1] < tie_threshold * basis.spectrum[0]) {
      throw DegenerateDirectionError(std::string("second local direction is ill-defined ") +
                                     where + ": the data is locally one-dimensional");
    }
  };

  const LocalBasis at_origin = basis_at(origin);
  require_second(at_origin, "at the loop origin");
  const Vector d1 = at_origin.directions.col(0);
  const Vector d2 = at_origin.directions.col(1);

  // At a revisited corner the local eigenvalue order can swap even when the
  // frame field itself barely rotates, so the continuation of an origin
  // direction is the top-two frame vector with the larger overlap, not the
  // column with the same rank.
  const auto continued = [](const LocalBasis& basis, const Vector& reference) {
    const Vector a = basis.directions.col(0);
    const Vector b = basis.directions.col(1);
    Vector pick = std::abs(a.dot(reference)) >= std::abs(b.dot(reference)) ? a : b;
    if (pick.dot(reference) < 0.0) pick = -pick;
    return pick;
  };

  // Walk A: first direction, then the second direction re-estimated there.
  const Vector corner_a = origin + epsilon * d1;
  const LocalBasis at_a = basis_at(corner_a);
  require_second(at_a, "after the first leg");
  const Vector end_a = corner_a + epsilon * continued(at_a, d2);

  // Walk B: the same legs in the opposite order.
  const Vector corner_b = origin + epsilon * d2;
  const LocalBasis at_b = basis_at(corner_b);
  require_second(at_b, "after the second walk's first leg");
  const Vector end_b = corner_b + epsilon * continued(at_b, d1);

  LoopDefect defect;
  defect.defect = end_a - end_b;
  defect.norm = defect.defect.norm();
  return defect;
}

}  // namespace papa
