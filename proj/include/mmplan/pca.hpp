#pragma once

#include "mmplan/grid.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace mmplan {

/// Neighborhood PCA settings. Weights and radii default to the calibrated values
/// (alpha 3, beta 2, wire alpha 20, r 1 m, r' 0.3 m, sampling 0.5 m); the two cosine
/// thresholds are configuration.
struct PcaParams {
  double alpha = 3.0;
  double beta = 2.0;
  double alpha_wire = 20.0;
  double radius = 1.0;
  double wire_radius = 0.3;
  double sampling_radius = 0.5;
  double stem_cos = 0.9;
  double wire_cos = 0.3;

  /// Throws std::invalid_argument when a field is out of range. A sampling radius of
  /// zero is accepted and disables representative sampling.
  void validate() const;
};

template <typename Scalar>
struct PcaResult {
  Vector3<Scalar> eigenvalues = Vector3<Scalar>::Zero();  // descending, non-negative
  Vector3<Scalar> v1 = Vector3<Scalar>::UnitX();
  Vector3<Scalar> v2 = Vector3<Scalar>::UnitY();
  Vector3<Scalar> v3 = Vector3<Scalar>::UnitZ();
  std::size_t n_neighbors = 0;
};

class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
template <typename Scalar>
void canonicalize_sign(Vector3<Scalar>& v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) > Scalar(1e-12)) {
      if (v[i] < Scalar(0)) v = -v;
      return;
    }
  }
}
}  // namespace detail

/// Eigen-decomposition of the population covariance of `points`.
template <typename Scalar>
PcaResult<Scalar> local_pca(std::span<const Vector3<Scalar>> points) {
  if (points.size() < 3) throw InsufficientData("local_pca: need at least 3 points");
  Vector3<Scalar> mean = Vector3<Scalar>::Zero();
  for (const auto& p : points) mean += p;
  mean /= static_cast<Scalar>(points.size());
  Matrix3<Scalar> cov = Matrix3<Scalar>::Zero();
  for (const auto& p : points) {
    const Vector3<Scalar> d = p - mean;
    cov.noalias() += d * d.transpose();
  }
  cov /= static_cast<Scalar>(points.size());

  Eigen::SelfAdjointEigenSolver<Matrix3<Scalar>> solver(cov);
  // Eigen returns ascending eigenvalues.
  PcaResult<Scalar> out;
  out.n_neighbors = points.size();
  for (int i = 0; i < 3; ++i) out.eigenvalues[i] = std::max(Scalar(0), solver.eigenvalues()[2 - i]);
  out.v1 = solver.eigenvectors().col(2).normalized();
  out.v2 = solver.eigenvectors().col(1).normalized();
  out.v3 = solver.eigenvectors().col(0).normalized();
  detail::canonicalize_sign(out.v1);
  detail::canonicalize_sign(out.v2);
  detail::canonicalize_sign(out.v3);
  return out;
}

PcaResult<double> local_pca(std::span<const CloudPoint> neighborhood);

struct Dimensionality {
  int d = 0;  // 1 linear, 2 planar, 3 volumetric
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
};

/// Linear/planar/volumetric features of an eigenvalue triple; ties favour the
/// lower dimension.
Dimensionality dimensionality(const PcaResult<double>& pca, const PcaParams& params);

/// Wire-strictness feature: lambda1 - alpha_wire * lambda2.
double wire_feature(const PcaResult<double>& pca, const PcaParams& params);

PointClass classify_point(const HashedGrid& grid, const Vec3& p, const PcaParams& params);

/// Labels every point. With a positive sampling radius, representatives are picked
/// in cell-key then within-cell order, and each representative's label is copied to
/// the still-unassigned points within that radius.
HashedGrid classify_cloud(const HashedGrid& grid, const PcaParams& params);

}  // namespace mmplan
