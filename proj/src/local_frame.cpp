#include "papa/local_frame.hpp"

#include "papa/errors.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace papa {

namespace {

// Sign convention for directions without a reference: first nonzero
// component positive.
void fix_sign(Eigen::Ref<Vector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

LocalBasis eigen_basis(const Eigen::Ref<const Matrix>& covariance) {
  if (covariance.rows() != covariance.cols()) {
    throw ValidationError("covariance matrix must be square");
  }
  const double scale = std::max(1.0, covariance.cwiseAbs().maxCoeff());
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw ValidationError("covariance matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(covariance);
  if (solver.info() != Eigen::Success) {
    throw NumericsError("eigendecomposition failed");
  }
  const Vector values = solver.eigenvalues();  // ascending
  if (values[0] < -1e-9 * scale) {
    throw ValidationError("covariance matrix is not positive semi-definite");
  }

  const Eigen::Index d = covariance.rows();
  LocalBasis basis;
  basis.directions.resize(d, d);
  basis.spectrum.resize(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const Eigen::Index src = d - 1 - k;  // flip to non-increasing
    basis.spectrum[k] = std::max(0.0, values[src]);
    basis.directions.col(k) = solver.eigenvectors().col(src);
    fix_sign(basis.directions.col(k));
  }
  return basis;
}

}  // namespace

LocalMoments local_covariance(const SpatialIndex& index,
                              const Eigen::Ref<const Vector>& center,
                              const NeighborhoodSpec& spec) {
  spec.validate();
  std::vector<Neighbor> neighbors = index.radius_query(center, spec.radius);
  if (spec.max_neighbors && static_cast<int>(neighbors.size()) > *spec.max_neighbors) {
    neighbors.resize(*spec.max_neighbors);
  }
  const int n = static_cast<int>(neighbors.size());
  if (n < spec.min_neighbors) {
    throw LostSupportError(n, spec.min_neighbors);
  }

  const RowMatrix& pts = index.cloud().points();
  const Eigen::Index d = pts.cols();
  Vector mean = Vector::Zero(d);
  for (const Neighbor& nb : neighbors) {
    mean += pts.row(nb.index).transpose();
  }
  mean /= n;

  Matrix covariance = Matrix::Zero(d, d);
  for (const Neighbor& nb : neighbors) {
    const Vector centered = pts.row(nb.index).transpose() - mean;
    covariance.noalias() += centered * centered.transpose();
  }
  covariance /= n - 1;
  return LocalMoments{std::move(mean), std::move(covariance), n};
}

PrincipalDirection first_principal_direction(
    const Eigen::Ref<const Matrix>& covariance,
    const std::optional<Vector>& reference) {
  LocalBasis basis = eigen_basis(covariance);
  Vector direction = basis.directions.col(0);
  if (reference) {
    if (reference->size() != direction.size()) {
      throw ValidationError("reference direction dimension mismatch");
    }
    if (direction.dot(*reference) < 0.0) direction = -direction;
  }
  return PrincipalDirection{std::move(direction), std::move(basis.spectrum)};
}

LocalBasis principal_directions(const Eigen::Ref<const Matrix>& covariance) {
  return eigen_basis(covariance);
}

FrameEstimate frame_at(const SpatialIndex& index,
                       const Eigen::Ref<const Vector>& center,
                       const NeighborhoodSpec& spec,
                       const std::optional<Vector>& reference) {
  LocalMoments moments = local_covariance(index, center, spec);
  PrincipalDirection principal = first_principal_direction(moments.covariance, reference);
  FrameEstimate frame;
  frame.origin = center;
  frame.direction = std::move(principal.direction);
  frame.spectrum = std::move(principal.spectrum);
  frame.support = moments.support;
  return frame;
}

}  // namespace papa
