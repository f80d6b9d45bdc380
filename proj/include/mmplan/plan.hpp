#pragma once

#include "mmplan/mip_model.hpp"
#include "mmplan/network.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mmplan {

enum class SolveStatus { Optimal, GapReached, TimeLimit, Infeasible, NoSolution };
std::string_view to_string(SolveStatus s);
SolveStatus parse_solve_status(std::string_view s);

enum class Polarity { Red, Blue };
std::string_view to_string(Polarity p);
Polarity parse_polarity(std::string_view s);

struct PlanLink {
  std::string from;
  std::string to;
  double flow = 0.0;
  double tdm = 0.0;
};

struct Plan {
  SolveStatus status = SolveStatus::NoSolution;
  double objective = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  std::size_t nodes = 0;
  double seconds = 0.0;
  std::vector<std::string> active_sites;    // CN, DN and POP sites with z = 1
  std::vector<std::string> active_sectors;  // "site.sector"
  std::vector<PlanLink> links;              // arcs carrying flow
  std::map<std::string, Polarity> polarity;
  std::map<std::string, double> unmet;      // MaxCoverage only
  std::map<std::string, double> values;     // every model variable by name

  bool has_solution() const { return status != SolveStatus::Infeasible && status != SolveStatus::NoSolution; }
  bool site_active(std::string_view id) const;
};

/// Solution vector of `model` taken from a plan's named values; names missing from
/// the plan come back as 0.
std::vector<double> plan_values(const Plan& plan, const MipModel& model);

}  // namespace mmplan
