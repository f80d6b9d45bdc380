#pragma once

#include "mmplan/mip_model.hpp"
#include "mmplan/plan.hpp"
#include "mmplan/simplex.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace mmplan {

struct SolveControls {
  double gap_target = 0.10;
  double time_limit = 1800.0;  // seconds
  std::optional<Plan> warm_start;
  std::ostream* log = nullptr;
  /// Log a progress line every this many nodes (incumbent changes are always logged).
  std::size_t log_every = 1000;
  SimplexOptions lp;

  void validate() const;  // throws std::invalid_argument
};

struct MipResult {
  SolveStatus status = SolveStatus::NoSolution;
  std::vector<double> x;  // incumbent, empty without one
  double objective = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  double root_bound = 0.0;
  std::size_t nodes = 0;
  double seconds = 0.0;
};

/// Relative gap (incumbent - bound) / max(|incumbent|, 1e-9), floored at 0.
double relative_gap(double incumbent, double bound);

/// LP-based branch and bound over the binary variables. Each node's bounds are
/// tightened by row-activity propagation before its LP is solved. The search dives
/// into the up branch after every split and otherwise resumes from the open node
/// with the lowest bound; it branches on the most fractional binary. Each new
/// incumbent, and every few hundred nodes after one, triggers a node-limited sub-MIP
/// over the binaries where the node relaxation and the incumbent disagree.
MipResult branch_and_bound(const MipModel& model, const SolveControls& controls = {});

/// Packs a solver result into a Plan for `problem` (the problem `model` was built from).
Plan make_plan(const DesignProblem& problem, const MipModel& model, const MipResult& result);

}  // namespace mmplan
