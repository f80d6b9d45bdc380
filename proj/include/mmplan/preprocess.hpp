#pragma once

#include "mmplan/grid.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmplan {

/// A street polyline in projected meters.
struct StreetWay {
  std::string id;
  std::vector<Vec2> nodes;
};

/// Raised when an operation needs a grid stage that has not run yet.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr double kDefaultStreetDistance = 20.0;

/// Marks every cell whose center lies within `max_dist` (2D) of a way as close and
/// every other cell as far.
HashedGrid osm_filter(const HashedGrid& grid, std::span<const StreetWay> ways, double max_dist);

/// Drops ground points and points in far cells. Throws StateError when the grid has
/// no classified points or has unlabeled cells.
HashedGrid remove_ground_and_far(const HashedGrid& grid);

/// Marks every cell close; used when no street data is available.
HashedGrid mark_all_close(const HashedGrid& grid);

}  // namespace mmplan
