#pragma once

#include "mmplan/network.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmplan {

class UnreachableDemand : public std::runtime_error {
 public:
  explicit UnreachableDemand(std::string dem)
      : std::runtime_error("demand point '" + dem + "' is not reachable from INT"), demand(std::move(dem)) {}
  std::string demand;
};

struct SteinerTree {
  std::vector<std::string> sites;  // problem site order
  std::vector<std::pair<std::string, std::string>> edges;
  double cost = 0.0;  // sum of site costs; INT and DEM count 0
};

/// Node-weighted Steiner tree over the undirected arc graph with terminals INT and
/// every DEM: grow from INT along cheapest paths to the nearest unreached DEM, take a
/// spanning tree of the collected sites and strip non-terminal leaves. Demand
/// points are never used as relays.
SteinerTree steiner_heuristic(const DesignProblem& problem);

/// Checks the tree shape: connected, |edges| = |sites| - 1, contains INT and every
/// DEM, each edge backed by an arc, every leaf a terminal. Returns an empty string
/// when valid, else a description of the first defect.
std::string validate_steiner_tree(const DesignProblem& problem, const SteinerTree& tree);

}  // namespace mmplan
