#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace mmplan {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec2 = Vector2<double>;
using Vec3 = Vector3<double>;
using Mat3 = Matrix3<double>;

/// Squared distance from `p` to the closed segment [a, b]; works in 2D or 3D.
template <typename Scalar, int Dim>
Scalar squared_distance_to_segment(const Eigen::Matrix<Scalar, Dim, 1>& p,
                                   const Eigen::Matrix<Scalar, Dim, 1>& a,
                                   const Eigen::Matrix<Scalar, Dim, 1>& b) {
  const Eigen::Matrix<Scalar, Dim, 1> ab = b - a;
  const Scalar len2 = ab.squaredNorm();
  if (len2 <= Scalar(0)) return (p - a).squaredNorm();
  const Scalar t = std::clamp((p - a).dot(ab) / len2, Scalar(0), Scalar(1));
  return (p - (a + t * ab)).squaredNorm();
}

template <typename Scalar, int Dim>
Scalar distance_to_segment(const Eigen::Matrix<Scalar, Dim, 1>& p,
                           const Eigen::Matrix<Scalar, Dim, 1>& a,
                           const Eigen::Matrix<Scalar, Dim, 1>& b) {
  return std::sqrt(squared_distance_to_segment(p, a, b));
}

template <typename Scalar>
Scalar cross2(const Vector2<Scalar>& u, const Vector2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

/// True when closed segments [p1,p2] and [q1,q2] share at least one point.
template <typename Scalar>
bool segments_intersect(const Vector2<Scalar>& p1, const Vector2<Scalar>& p2,
                        const Vector2<Scalar>& q1, const Vector2<Scalar>& q2) {
  auto orient = [](const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& c) {
    const Scalar v = cross2<Scalar>(b - a, c - a);
    return (v > Scalar(0)) - (v < Scalar(0));
  };
  auto on_segment = [](const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& c) {
    return std::min(a.x(), b.x()) <= c.x() && c.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= c.y() && c.y() <= std::max(a.y(), b.y());
  };
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

/// Even-odd point-in-polygon test; boundary points may go either way.
template <typename Scalar>
bool point_in_polygon(const Vector2<Scalar>& p, std::span<const Vector2<Scalar>> poly) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const auto& a = poly[i];
    const auto& b = poly[j];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const Scalar x_cross = (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) + a.x();
      if (p.x() < x_cross) inside = !inside;
    }
  }
  return inside;
}

/// Distance between an axis-aligned rectangle [lo, hi] and the segment [a, b] (2D).
/// Zero when they touch.
template <typename Scalar>
Scalar rect_segment_distance(const Vector2<Scalar>& lo, const Vector2<Scalar>& hi,
                             const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
  auto inside = [&](const Vector2<Scalar>& p) {
    return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() && p.y() <= hi.y();
  };
  if (inside(a) || inside(b)) return Scalar(0);
  const Vector2<Scalar> corners[4] = {lo, {hi.x(), lo.y()}, hi, {lo.x(), hi.y()}};
  for (int i = 0; i < 4; ++i) {
    if (segments_intersect<Scalar>(a, b, corners[i], corners[(i + 1) % 4])) return Scalar(0);
  }
  // Disjoint convex sets: the minimum is attained at a vertex of one of them.
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (const auto& c : corners) best = std::min(best, distance_to_segment<Scalar, 2>(c, a, b));
  auto clamp_dist = [&](const Vector2<Scalar>& p) {
    const Vector2<Scalar> q(std::clamp(p.x(), lo.x(), hi.x()), std::clamp(p.y(), lo.y(), hi.y()));
    return (p - q).norm();
  };
  best = std::min(best, clamp_dist(a));
  best = std::min(best, clamp_dist(b));
  return best;
}

}  // namespace mmplan
