#pragma once

#include "mmplan/branch_bound.hpp"
#include "mmplan/io.hpp"
#include "mmplan/metrics.hpp"
#include "mmplan/planner.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace httplib {
class Server;
}

namespace mmplan {

class UnknownSite : public std::out_of_range {
 public:
  explicit UnknownSite(const std::string& id) : std::out_of_range("unknown site '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

/// Per-request changes layered over the session defaults.
struct SolveRequest {
  std::optional<double> gap_target;
  std::optional<double> time_limit;
  std::optional<double> demand_multiplier;
  std::optional<Objective> objective;
  std::optional<double> budget;

  static SolveRequest from_json(const Json& body);  // throws std::invalid_argument
};

/// One operator's working state: the loaded problem, per-site overrides and the
/// last completed plan. Solves are serialized; readers never wait for a solve.
class Session {
 public:
  explicit Session(DesignProblem problem, SolveControls controls = {}, MipOptions mip = {});

  const DesignProblem& problem() const { return problem_; }

  void set_override(const std::string& site_id, SiteOverride state);  // throws UnknownSite
  Overrides overrides() const;

  /// Runs a direct solve honoring the overrides; empty when another solve is running.
  std::optional<Plan> solve(const SolveRequest& request = {});
  bool solving() const { return solving_; }

  /// {plan, metrics, solving, overrides}; plan and metrics are null before the first solve.
  Json plan_json() const;
  Json plan_geojson() const;

 private:
  DesignProblem problem_;
  SolveControls controls_;
  MipOptions mip_;

  mutable std::mutex state_mutex_;  // guards the fields below
  Overrides overrides_;
  std::optional<Plan> plan_;
  std::optional<DesignProblem> solved_;  // problem the plan belongs to

  std::mutex solve_mutex_;
  std::atomic<bool> solving_{false};
};

/// Registers the HTTP routes for `session` on `server`:
///   GET /problem, GET /plan, POST /solve, PATCH /sites/{id}, GET /plan.geojson.
void register_routes(httplib::Server& server, Session& session);

}  // namespace mmplan
