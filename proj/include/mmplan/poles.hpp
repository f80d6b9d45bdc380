#pragma once

#include "mmplan/grid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mmplan {

struct DetectionParams {
  double stem_link_dist = 0.5;
  double component_dist = 2.0;
  double object_link_dist = 1.0;
  double min_stem_height = 2.0;
  double mount_height = 8.0;

  double min_height = 5.0;
  double max_height = 30.0;
  double ground_window_lo = -1.0;
  double ground_window_hi = 8.0;
  double max_planar_ratio = 0.60;
  double max_volumetric_ratio = 0.75;
  double min_stem_ratio = 0.10;
  double min_linear_ratio = 0.20;
  double top_fraction = 0.40;
  double top_volumetric_cap = 0.50;
  std::size_t wire_rescue_count = 25;
  double bottom_fraction = 0.20;
  double bottom_area_cap = 2.0;

  void validate() const;
};

struct StemCandidate {
  Vec2 xy = Vec2::Zero();  // centroid of the stem points
  double z_min = 0.0;
  double z_max = 0.0;
  double ground_z = 0.0;  // set by filter_stems
  std::size_t n_points = 0;
};

struct PoleCluster {
  PointCloud points;
  Vec2 stem_xy = Vec2::Zero();
  double z_min = 0.0;
  double z_max = 0.0;
  double ground_z = 0.0;
  ClassCounts counts{};
  std::size_t nearby_wires = 0;
  std::size_t stem_index = 0;
};

struct RuleVerdicts {
  bool height = false;
  bool near_ground = false;
  bool planar_volumetric = false;
  bool stem_linear = false;
  bool top_volumetric = false;
  bool bottom_area = false;

  bool accepted() const {
    return height && near_ground && planar_volumetric && stem_linear && top_volumetric && bottom_area;
  }
};

struct DetectedPole {
  std::string id;
  double x = 0.0;
  double y = 0.0;
  double ground_z = 0.0;
  double mount_z = 0.0;
  double height = 0.0;
  RuleVerdicts rules;
};

/// Single-link components of `points` under distance <= link (3D, or xy only when
/// `planar` is set). Component ids are dense and ordered by first member index.
std::vector<std::size_t> link_components(std::span<const Vec3> points, double link, bool planar);

std::vector<StemCandidate> cluster_stems(const HashedGrid& grid, const DetectionParams& params);

/// Median z of PlanarGround points in the 3x3 cell block around `xy`, if any.
std::optional<double> local_ground_z(const HashedGrid& full_grid, const Vec2& xy);

std::vector<StemCandidate> filter_stems(std::span<const StemCandidate> candidates, const HashedGrid& full_grid,
                                        const DetectionParams& params);

/// Non-ground points within component_dist (xy) of any stem centroid, in grid order.
PointCloud retrieve_components(const HashedGrid& grid, std::span<const StemCandidate> stems,
                               const DetectionParams& params);

/// Clusters the non-wire points; each cluster is tied to the stem nearest its
/// centroid and counts the wire points of `points` within component_dist of it.
std::vector<PoleCluster> cluster_objects(std::span<const CloudPoint> points, std::span<const StemCandidate> stems,
                                         const DetectionParams& params);

RuleVerdicts classify_pole(const PoleCluster& cluster, const DetectionParams& params);

/// Full pipeline on the filtered grid; `full_grid` still holds the ground points.
std::vector<DetectedPole> detect_poles(const HashedGrid& grid, const HashedGrid& full_grid,
                                       const DetectionParams& params);

}  // namespace mmplan
