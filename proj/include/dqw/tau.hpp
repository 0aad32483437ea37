#ifndef DQW_TAU_HPP
#define DQW_TAU_HPP

#include <string>
#include <vector>

#include "dqw/cochain.hpp"
#include "dqw/coboundary_solver.hpp"
#include "dqw/star_product.hpp"

namespace dqw {

struct tau_stage_report {
  int k = 0;
  /// Degree-k part of the error before tau_k is added.
  multi_diff_cochain error_before;
  multi_diff_cochain rk;
  bool rk_cocycle = false;
  bool rk_classical_symmetric = false;
  solver_report solver;
  bool hermitian_adjusted = false;
  /// tau_k after symmetrization minus the solver output.
  multi_diff_cochain hermitian_adjustment;
};

struct build_report {
  /// s in d tau_k = s R_k, fixed at the first stage.
  int stage_sign = 0;
  std::vector<tau_stage_report> stages;
};

/// tau = pi* + sum_k tau_k with tau_k deg-homogeneous of degree k.
struct tau_map {
  int n = 0;
  int order = 0;
  bool hermitian = false;
  std::vector<multi_diff_cochain> components;
  build_report report;
};

/// R_k = sum_{i<k} lambda^{k-i} tau_i(C_{k-i}) - sum_{i=1}^{k-1} tau_i * tau_{k-i}
/// with tau_0 the identity; `tau` must hold at least tau_0..tau_{k-1}.
multi_diff_cochain compute_rk(const star_product_spec& spec, const std::vector<multi_diff_cochain>& tau, int k);

/// tau(f * g) - tau(f) * tau(g) as a cochain, keeping degrees <= max_deg.
multi_diff_cochain homomorphism_error(const star_product_spec& spec, const std::vector<multi_diff_cochain>& tau,
                                      int max_deg);
multi_diff_cochain homomorphism_defect(const star_product_spec& spec, const tau_map& tau);

/// Order-by-order construction. Throws consistency_error when R_k fails its
/// cocycle or symmetry checks or the recomputed error does not vanish.
tau_map build_tau(const star_product_spec& spec, int order, bool hermitian, const solver_config& config = {});

/// f(q - theta p / 2) expanded as tau_k(f) = sum_{|a|=k} (1/a!) prod_i (-1/2 theta^{ij} p_j)^{a_i} d^a f.
tau_map closed_form_constant_theta_tau(const rational_matrix& theta, int order);

/// Applies tau to a p-free lambda-series, truncated at the smaller order.
w_element apply_tau(const tau_map& tau, const w_element& f);
/// Sum of the lambda-free parts of the components.
w_element classical_tau(const tau_map& tau, const w_element& f);

struct poisson_realization_report {
  bool passed = true;
  std::size_t pairs_checked = 0;
  int violation_p_degree = -1;
  std::vector<std::string> witness;
};

/// cl(tau){f, g} = {cl(tau) f, cl(tau) g}_can through p-degree K - 1 on all
/// q-monomial pairs of degree <= basis_degree.
poisson_realization_report check_poisson_realization(const tau_map& tau, const star_product_spec& spec,
                                                     int basis_degree = 2);

}  // namespace dqw

#endif  // DQW_TAU_HPP
