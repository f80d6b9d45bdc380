#pragma once

#include "mmplan/cloud.hpp"
#include "mmplan/preprocess.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace mmplan {

/// Appends synthetic surfaces sampled on a regular lattice with small z jitter.
class SceneBuilder {
 public:
  SceneBuilder(std::uint64_t seed, double spacing = 0.1, double noise = 0.005);

  void ground(double x0, double y0, double x1, double y1, double z = 0.0);
  /// Vertical cylinder from `base_z` to `base_z + height`, with an optional
  /// horizontal arm at the top pointing along +x.
  void pole(double x, double y, double base_z, double height, double radius = 0.12, double arm = 0.0);
  /// Trunk cylinder plus a filled spherical crown resting on it.
  void tree(double x, double y, double base_z, double trunk_height, double crown_radius);
  /// Vertical rectangle over the 2D segment [a, b].
  void wall(const Vec2& a, const Vec2& b, double base_z, double height);
  void wire(const Vec3& a, const Vec3& b);

  PointCloud& points() { return points_; }
  PointCloud take() { return std::move(points_); }

 private:
  double jitter();

  std::mt19937_64 rng_;
  std::normal_distribution<double> noise_dist_;
  double spacing_;
  PointCloud points_;
};

struct SceneSpec {
  double width = 200.0;
  double depth = 100.0;
  std::size_t poles = 20;
  std::size_t trees = 10;
  std::size_t walls = 5;
  std::uint64_t seed = 1;
  double spacing = 0.1;

  void validate() const;
};

struct TruthPole {
  double x = 0.0;
  double y = 0.0;
  double height = 0.0;
};

struct TruthTree {
  double x = 0.0;
  double y = 0.0;
  double trunk_height = 0.0;
  double crown_radius = 0.0;
};

struct TruthWall {
  Vec2 a = Vec2::Zero();
  Vec2 b = Vec2::Zero();
  double height = 0.0;
};

struct SceneTruth {
  std::vector<TruthPole> poles;
  std::vector<TruthTree> trees;
  std::vector<TruthWall> walls;
  std::vector<std::pair<std::size_t, std::size_t>> wires;  // pole index pairs
};

struct Scene {
  PointCloud cloud;
  SceneTruth truth;
  std::vector<StreetWay> ways;
};

/// Street-side city block: two streets along x, poles on the kerbs (neighbouring
/// poles on a kerb are strung with wires), trees and L-shaped building corners
/// set back from the street.
Scene generate_city(const SceneSpec& spec);

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  std::size_t matched = 0;
};

/// Greedy nearest matching of detections to truth within `tolerance` (xy).
PrecisionRecall score_detections(std::span<const Vec2> detected, std::span<const Vec2> truth, double tolerance = 1.0);

}  // namespace mmplan
