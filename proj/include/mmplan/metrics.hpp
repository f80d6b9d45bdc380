#pragma once

#include "mmplan/network.hpp"
#include "mmplan/plan.hpp"

#include <string>
#include <vector>

namespace mmplan {

struct PlanMetrics {
  std::size_t dn_possible = 0;
  std::size_t dn_selected = 0;
  std::size_t pop_possible = 0;
  std::size_t pop_selected = 0;
  std::size_t antenna_possible = 0;  // radio sectors
  std::size_t antenna_selected = 0;
  std::size_t wifi_possible = 0;
  std::size_t wifi_selected = 0;
  std::size_t demand_possible = 0;
  std::size_t demand_connected = 0;
  std::size_t demand_alternate = 0;
  double demand_alternate_pct = 0.0;
  double nodes_per_site = 0.0;  // active radio sectors per active DN site
};

/// Table of counts for a solved plan. A connected demand point has an alternate
/// path when it stays reachable from INT over active sites, sectors and arcs after
/// deleting any single active DN or CN.
PlanMetrics compute_metrics(const DesignProblem& problem, const Plan& plan);

struct PolarityViolation {
  std::string from;
  std::string to;
  std::string reason;
};

/// Every DN/POP arc with a positive TDM share or flow must join two active sites of
/// opposite polarity, and every active DN/POP must carry exactly one color.
std::vector<PolarityViolation> polarity_violations(const DesignProblem& problem, const Plan& plan);

}  // namespace mmplan
