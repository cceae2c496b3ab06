#pragma once

#include "papa/neighbors.hpp"
#include "papa/types.hpp"

#include <optional>

namespace papa {

struct LocalMoments {
  Vector mean;
  Matrix covariance;  // sample covariance, divisor n-1
  int support = 0;
};

/// Mean and covariance of the points within spec.radius of center. When
/// spec.max_neighbors is set only the nearest that many points enter.
/// Throws LostSupportError if fewer than spec.min_neighbors are found.
LocalMoments local_covariance(const SpatialIndex& index,
                              const Eigen::Ref<const Vector>& center,
                              const NeighborhoodSpec& spec);

struct PrincipalDirection {
  Vector direction;  // unit eigenvector of the largest eigenvalue
  Vector spectrum;   // all eigenvalues, non-increasing, clamped at 0
};

/// Dominant eigenvector of a symmetric PSD matrix. With a reference the sign
/// is chosen so dot(direction, reference) >= 0; without one, so that the
/// first nonzero component is positive. A near-tie between the top two
/// eigenvalues is not an error; callers read it off the spectrum.
PrincipalDirection first_principal_direction(
    const Eigen::Ref<const Matrix>& covariance,
    const std::optional<Vector>& reference = std::nullopt);

struct LocalBasis {
  Matrix directions;  // columns sorted by descending eigenvalue, each with
                      // its first nonzero component positive
  Vector spectrum;
};

/// Full eigenbasis of a symmetric PSD matrix under the same conventions.
LocalBasis principal_directions(const Eigen::Ref<const Matrix>& covariance);

/// Local covariance followed by its first principal direction: the
/// data-driven frame vector at an arbitrary query position.
FrameEstimate frame_at(const SpatialIndex& index,
                       const Eigen::Ref<const Vector>& center,
                       const NeighborhoodSpec& spec,
                       const std::optional<Vector>& reference = std::nullopt);

}  // namespace papa
