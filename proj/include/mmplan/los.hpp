#pragma once

#include "mmplan/grid.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mmplan {

struct LosParams {
  double max_dist = 300.0;
  double min_dist = 5.0;
  double clearance_radius = 0.3;
  std::size_t obstruction_threshold = 3;
  double endpoint_exclusion = 1.0;
  /// Mount heights above local ground to try on both ends; empty means each site's
  /// own mount elevation.
  std::vector<double> heights;

  void validate() const;
};

struct LosSite {
  std::string id;
  double x = 0.0;
  double y = 0.0;
  double ground_z = 0.0;
  double mount_z = 0.0;

  Vec2 xy() const { return {x, y}; }
};

struct LosEdge {
  std::string a;
  std::string b;
  double distance = 0.0;
  std::size_t obstruction_count = 0;
  double height_used = 0.0;
};

/// Points within `clearance` (3D) of segment pq, ignoring points within
/// `endpoint_exclusion` of either endpoint.
std::size_t segment_obstructions(const HashedGrid& grid, const Vec3& p, const Vec3& q, double clearance,
                                 double endpoint_exclusion = 1.0);

/// Tries every configured height and keeps the least obstructed one. Endpoints are
/// ordered by id first, so the verdict does not depend on argument order.
std::optional<LosEdge> line_of_sight(const HashedGrid& grid, const LosSite& a, const LosSite& b,
                                     const LosParams& params);

/// Index pairs (i < j) with horizontal distance <= max_dist, found through a site
/// hash; sorted.
std::vector<std::pair<std::size_t, std::size_t>> pairs_within(std::span<const LosSite> sites, double max_dist);

std::vector<LosEdge> all_los(const HashedGrid& grid, std::span<const LosSite> sites, const LosParams& params);

using Polygon = std::vector<Vec2>;

/// Throws std::invalid_argument for polygons with fewer than three vertices,
/// non-finite coordinates or crossing edges.
void validate_polygon(const Polygon& poly);

/// Index pairs within max_dist whose 2D connecting segment touches no building.
std::vector<std::pair<std::size_t, std::size_t>> polygon_prefilter(std::span<const LosSite> sites,
                                                                   std::span<const Polygon> buildings,
                                                                   const LosParams& params);

}  // namespace mmplan
