#pragma once

#include "mmplan/mip_model.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <cstdint>
#include <memory>
#include <vector>

namespace mmplan {

/// min c'x  s.t.  row_lo <= A x <= row_hi,  col_lo <= x <= col_hi.
struct LpProblem {
  Eigen::SparseMatrix<double> A;  // rows x cols, column-major
  Eigen::VectorXd c;
  Eigen::VectorXd col_lo, col_hi;
  Eigen::VectorXd row_lo, row_hi;

  Eigen::Index rows() const { return A.rows(); }
  Eigen::Index cols() const { return A.cols(); }
};

/// LP relaxation of a model: binaries become [0, 1] continuous columns.
LpProblem relax(const MipModel& model);

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };
std::string_view to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
  std::size_t iterations = 0;
};

struct SimplexOptions {
  double primal_tol = 1e-9;
  double dual_tol = 1e-9;
  double pivot_tol = 1e-9;
  std::size_t refactor_interval = 50;
  /// Consecutive degenerate pivots before switching to Bland's rule.
  std::size_t bland_after = 100;
  std::size_t max_iterations = 0;  // 0: 50 * (rows + cols) + 10000
  /// Relative size of the cost shift applied after `perturb_after` consecutive
  /// degenerate pivots and removed once optimal; 0 disables.
  double perturbation = 1e-6;
  std::size_t perturb_after = 30;
};

/// Bounded dual simplex on [A | -I] with a slack starting basis. The basis is kept
/// between solve() calls, so re-solving after bound changes is a warm start.
class DualSimplex {
 public:
  explicit DualSimplex(LpProblem lp, SimplexOptions options = {});
  ~DualSimplex();
  DualSimplex(DualSimplex&&) noexcept;
  DualSimplex& operator=(DualSimplex&&) noexcept;

  const LpProblem& problem() const { return lp_; }
  void set_col_bounds(Eigen::Index j, double lo, double hi);
  double col_lo(Eigen::Index j) const { return lo_[j]; }
  double col_hi(Eigen::Index j) const { return hi_[j]; }

  LpSolution solve();

 private:
  enum class Status : std::uint8_t { Basic, Lower, Upper, Zero };
  struct Eta {
    Eigen::Index row;
    Eigen::VectorXd column;
  };

  Eigen::Index total() const { return n_ + m_; }
  double column_dot(Eigen::Index j, const Eigen::VectorXd& v) const;
  void add_column(Eigen::Index j, double scale, Eigen::VectorXd& out) const;
  bool refactor();
  void reset_to_slack_basis();
  void ftran(Eigen::VectorXd& v) const;
  void btran(Eigen::VectorXd& v) const;
  void compute_primal();
  void compute_duals();
  bool make_dual_feasible();
  void place_nonbasic(Eigen::Index j);
  double infeasibility(Eigen::Index var) const;

  LpProblem lp_;
  SimplexOptions opt_;
  Eigen::Index n_ = 0;
  Eigen::Index m_ = 0;
  Eigen::VectorXd lo_, hi_, cost_;
  Eigen::VectorXd x_, d_;
  std::vector<Status> status_;
  std::vector<char> artificial_;
  std::vector<Eigen::Index> head_;
  Eigen::VectorXd weight_;  // dual steepest-edge weight per basis row
  std::vector<Eigen::Index> row_of_;
  using Lu = Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>>;
  std::unique_ptr<Lu> lu_;
  std::vector<Eta> etas_;
  bool factored_ = false;
};

LpSolution solve_lp(const LpProblem& lp, const SimplexOptions& options = {});
LpSolution solve_lp(const MipModel& model, const SimplexOptions& options = {});

}  // namespace mmplan
