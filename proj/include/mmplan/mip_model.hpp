#pragma once

#include "mmplan/network.hpp"

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace mmplan {

enum class VarKind { Binary, Continuous };
enum class VarRole { Site, Sector, Flow, Tdm, Red, Blue, Unmet };
enum class RowSense { LessEqual, GreaterEqual, Equal };

std::string_view to_string(VarRole r);

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  VarRole role = VarRole::Flow;
  double lb = 0.0;
  double ub = std::numeric_limits<double>::infinity();
  double cost = 0.0;
  std::size_t ref = 0;  // site, flat sector or arc index depending on role
};

struct Term {
  std::size_t var;
  double coef;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  RowSense sense = RowSense::LessEqual;
  double rhs = 0.0;
};

struct SectorRef {
  std::size_t site;
  std::size_t sector;
};

struct MipOptions {
  /// Use min(M, T_ij) instead of M in arc-level activation rows.
  bool tighten_big_m = false;
  /// One TDM row per sector covering both directions.
  bool merge_tdm = false;
};

/// The compiled program: minimise sum(cost * x) subject to the rows and bounds.
struct MipModel {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<Variable> vars;
  std::vector<Constraint> rows;
  std::vector<SectorRef> sectors;  // flat sector list, in site order
  std::vector<std::size_t> z, s, f, p, r, b, y;  // variable index per site/sector/arc; npos when absent
  double big_m = 0.0;

  std::size_t add_var(Variable v);
  std::size_t add_row(Constraint c);
  std::size_t num_binaries() const;
  double objective(std::span<const double> x) const;
  /// Fixes a variable to a value (both bounds).
  void fix(std::size_t var, double value);
  std::optional<std::size_t> find_var(std::string_view name) const;
};

class InvalidQuality : public InvalidProblem {
 public:
  using InvalidProblem::InvalidProblem;
};

MipModel build_mip(const DesignProblem& problem, const MipOptions& options = {});

struct FeasibilityReport {
  bool feasible = true;
  double max_violation = 0.0;
  std::string worst;  // name of the worst row or variable
};

/// Re-substitutes `x` into every bound, integrality requirement and row.
FeasibilityReport check_feasibility(const MipModel& model, std::span<const double> x, double tol = 1e-6);

/// CPLEX-LP text rendering (objective, rows, bounds, binaries).
void write_lp(std::ostream& out, const MipModel& model);

}  // namespace mmplan
