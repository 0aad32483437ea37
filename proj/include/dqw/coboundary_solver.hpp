#ifndef DQW_COBOUNDARY_SOLVER_HPP
#define DQW_COBOUNDARY_SOLVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dqw/cochain.hpp"
#include "dqw/linear_system.hpp"

namespace dqw {

struct solver_config {
  /// Initial allowance on top of the target's derivative order and q-degree.
  int slack = 2;
  /// Slack doubles on infeasibility until it exceeds this value.
  int max_slack = 8;
  /// Restricts the ansatz to cochains that differentiate every argument.
  bool require_nonzero_derivatives = false;
  /// Solves the classical limit first and the lambda-divisible rest after.
  bool lambda_stripping = false;
  std::size_t max_cells = default_max_solver_cells();
};

struct solver_attempt {
  std::string grading_class;
  int slack = 0;
  int max_derivative_order = 0;
  int max_q_degree = 0;
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::size_t rank = 0;
  bool feasible = false;
};

struct solver_report {
  std::vector<solver_attempt> attempts;
  int classes = 0;
  int max_slack_used = 0;
  bool lambda_stripping = false;
};

struct solver_result {
  multi_diff_cochain solution;
  solver_report report;
};

/// Finds psi of arity target.arity() - 1 with coboundary(psi, mode) == target.
/// Requires target to be a cocycle whose antisymmetrized classical part
/// vanishes (precondition_error otherwise); throws solver_exhausted when no
/// solution exists within the escalated bounds. The returned psi is
/// re-verified exactly.
solver_result solve_hochschild(const multi_diff_cochain& target, coboundary_mode mode,
                               const solver_config& config = {});

/// Arity-2, deg-homogeneous deformed-mode solve; psi has the same degree.
solver_result solve_coboundary(const multi_diff_cochain& phi, const solver_config& config = {});

/// Classical stage: psi with coboundary(psi, classical) == classical_limit(phi).
solver_result solve_classical_stage(const multi_diff_cochain& phi, const solver_config& config = {});

}  // namespace dqw

#endif  // DQW_COBOUNDARY_SOLVER_HPP
