#pragma once

#include "mmplan/geometry.hpp"
#include "mmplan/los.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mmplan {

enum class SiteKind { DN, CN, POP, DEM, INT };
enum class SectorKind { Radio, Wifi, Lte, Fiber, Wired };
enum class Objective { MinCost, MaxCoverage };

std::string_view to_string(SiteKind k);
std::string_view to_string(SectorKind k);
std::string_view to_string(Objective o);
SiteKind parse_site_kind(std::string_view s);
SectorKind parse_sector_kind(std::string_view s);
Objective parse_objective(std::string_view s);

struct Sector {
  std::string id;
  double cost = 0.0;
  SectorKind kind = SectorKind::Radio;
  std::vector<std::string> reachable;
};

struct Site {
  std::string id;
  SiteKind kind = SiteKind::DN;
  double x = 0.0;
  double y = 0.0;
  double cost = 0.0;
  double demand = 0.0;
  std::vector<Sector> sectors;
};

struct Arc {
  std::string from;
  std::string to;
  double throughput = 1.8;
  double quality = 0.99;
  std::string from_sector;
  std::string to_sector;  // empty when the head has no sectors (demand points)
};

class InvalidProblem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DesignProblem {
  std::vector<Site> sites;
  std::vector<Arc> arcs;
  Objective objective = Objective::MinCost;
  double alpha = 0.1;
  double max_hops = 10.0;
  double budget = std::numeric_limits<double>::infinity();

  double total_demand() const;
  std::optional<std::size_t> find_site(std::string_view id) const;
  std::size_t site_index(std::string_view id) const;  // throws InvalidProblem
  std::size_t int_index() const;
  /// Checks references, kinds and value ranges; throws InvalidProblem.
  void validate() const;
  /// Copy with every demand multiplied by `factor`.
  DesignProblem scaled_demand(double factor) const;
};

struct NetworkConfig {
  double dn_cost = 10.0;
  double pop_cost = 40.0;
  double cn_cost = 4.0;
  double radio_sector_cost = 2.0;
  double wifi_sector_cost = 1.0;
  double wired_sector_cost = 0.5;
  double fiber_sector_cost = 0.0;
  double radio_throughput = 1.8;
  double wifi_throughput = 1.8;
  double wired_throughput = 1.8;
  double fiber_throughput = 1.8;
  double quality = 0.99;
  double sector_width_deg = 90.0;
  double wifi_range = 45.0;
  double wired_range = 10.0;
  double demand_per_point = 0.1;
  double alpha = 0.1;
  double max_hops = 10.0;
};

/// Demand points on a regular lattice covering [x0, x1] x [y0, y1], spacing apart,
/// with ids "dem<i>".
std::vector<Site> demand_grid(double x0, double y0, double x1, double y1, double spacing, double demand);

/// Smallest set of sectors of width `width_deg` covering every azimuth; returns the
/// sector index of each azimuth. Azimuths are in degrees.
std::vector<std::size_t> group_azimuths(std::span<const double> azimuths_deg, double width_deg);

/// Assembles the design problem. `candidates` are DN/POP candidate sites (ids and
/// positions); those listed in `pops` become POPs. `cns` are CN sites. LoS edges
/// become bidirectional radio arcs; every DN/POP gets a wifi sector reaching the
/// demand points within wifi_range and every CN a wired sector per demand point
/// within wired_range.
DesignProblem build_network(std::span<const LosSite> candidates, std::span<const LosEdge> los,
                            std::span<const std::string> pops, std::span<const Site> demands,
                            std::span<const LosSite> cns, const NetworkConfig& config);

}  // namespace mmplan
