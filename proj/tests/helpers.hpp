#pragma once

#include "papa/neighbors.hpp"
#include "papa/rng.hpp"
#include "papa/types.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace papa::testing {

inline PointCloud make_cloud(const std::vector<std::vector<double>>& rows) {
  return validate_cloud(rows);
}

/// Independent reference for radius queries: scan every point, keep the ones
/// within the radius (decided on squared distances, like any direct scan),
/// sort by distance then index.
inline std::vector<Neighbor> brute_force_radius(const PointCloud& cloud,
                                                const Vector& center,
                                                double radius) {
  std::vector<Neighbor> result;
  const double r2 = radius * radius;
  for (int i = 0; i < cloud.size(); ++i) {
    const double d2 = (cloud.point(i) - center).squaredNorm();
    if (d2 <= r2) {
      result.push_back({i, std::sqrt(d2)});
    }
  }
  std::sort(result.begin(), result.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.index < b.index;
  });
  return result;
}

/// Random orthogonal matrix with determinant +1, via QR of a Gaussian matrix
/// with the R diagonal made positive (Haar-distributed up to the det fix).
inline Matrix random_rotation(int d, SplitRng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = rng.normal();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  if (q.determinant() < 0.0) q.col(d - 1) = -q.col(d - 1);
  return q;
}

inline std::vector<double> ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> rank(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double mean_rank = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mean_rank;
    i = j + 1;
  }
  return rank;
}

/// Spearman rank correlation with midranks for ties.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const std::vector<double> ra = ranks(a);
  const std::vector<double> rb = ranks(b);
  const std::size_t n = ra.size();
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  return cov / std::sqrt(va * vb);
}

/// Dominant eigenvector by plain power iteration, an independent route to
/// the answer the eigensolver gives. Requires a genuine eigengap.
inline Vector power_iteration(const Matrix& m, int iterations = 10000) {
  Vector v = Vector::Ones(m.rows());
  v /= v.norm();
  for (int k = 0; k < iterations; ++k) {
    Vector next = m * v;
    const double norm = next.norm();
    if (norm == 0.0) return v;
    next /= norm;
    if (next.dot(v) < 0.0) next = -next;
    v = next;
  }
  return v;
}

inline double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace papa::testing
