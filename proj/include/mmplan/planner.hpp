#pragma once

#include "mmplan/branch_bound.hpp"
#include "mmplan/mip_model.hpp"
#include "mmplan/network.hpp"
#include "mmplan/plan.hpp"
#include "mmplan/steiner.hpp"

#include <map>
#include <string>
#include <vector>

namespace mmplan {

enum class SiteOverride { Free, LockedIn, Excluded };
std::string_view to_string(SiteOverride o);
SiteOverride parse_site_override(std::string_view s);  // "free", "locked-in", "excluded"

using Overrides = std::map<std::string, SiteOverride>;

/// Fixes z = 1 (locked-in) or z = 0 (excluded) on the model; throws InvalidProblem
/// for unknown ids.
void apply_overrides(MipModel& model, const DesignProblem& problem, const Overrides& overrides);

/// Builds the model, applies overrides and runs branch and bound.
Plan solve_direct(const DesignProblem& problem, const SolveControls& controls = {}, const MipOptions& mip = {},
                  const Overrides& overrides = {});

struct TwoStageOptions {
  /// Also fix z = 0 for every site outside the tree.
  bool strict = false;
  MipOptions mip;
};

struct TwoStageResult {
  SteinerTree tree;
  Plan plan;  // gap measured against the unrestricted root LP bound
  double unrestricted_bound = 0.0;
  double search_gap = 0.0;  // gap of the stage-2 search against its own bound
};

TwoStageResult two_stage_solve(const DesignProblem& problem, const SolveControls& controls = {},
                               const TwoStageOptions& options = {});

struct SensitivityRow {
  double multiplier = 1.0;
  double seconds = 0.0;
  double gap = 0.0;     // stage-2 search gap, the one the stop rule reads
  double lp_gap = 0.0;  // against the unrestricted root LP
  std::size_t antenna_nodes = 0;
  std::size_t wifi_aps = 0;
  std::size_t dn_sites = 0;
  std::size_t fiber_pops = 0;
  double objective = 0.0;
  SolveStatus status = SolveStatus::NoSolution;
};

/// One row per demand multiplier: two_stage_solve on the scaled problem, stopping
/// at controls.gap_target or controls.time_limit.
std::vector<SensitivityRow> run_sensitivity(const DesignProblem& problem, const std::vector<double>& multipliers,
                                            const SolveControls& controls = {}, const MipOptions& mip = {});

}  // namespace mmplan
