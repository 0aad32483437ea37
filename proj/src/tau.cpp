#include "dqw/tau.hpp"

#include <algorithm>

#include "dqw/error.hpp"
#include "dqw/weyl.hpp"

namespace dqw {

namespace {

const multi_diff_cochain& component(const std::vector<multi_diff_cochain>& tau, int i) {
  return tau[static_cast<std::size_t>(i)];
}

std::vector<w_element> q_monomials(int n, int degree, int order) {
  std::vector<w_element> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  const std::vector<int> zero(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == n) {
      out.push_back(w_element::monomial(n, order, 0, zero, e));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      e[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, remaining - v);
    }
    e[static_cast<std::size_t>(slot)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::string describe(const w_element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : a.terms()) out += (out.empty() ? "" : " + ") + terms::describe(a.layout(), k, c);
  return out;
}

w_element p_degree_component(const w_element& a, int degree) {
  term_map out;
  for (const auto& [k, c] : a.terms()) {
    if (terms::p_degree(a.layout(), k) == degree) out.emplace_hint(out.end(), k, c);
  }
  return w_element::from_terms(a.dimension(), a.order(), std::move(out));
}

}  // namespace

multi_diff_cochain compute_rk(const star_product_spec& spec, const std::vector<multi_diff_cochain>& tau, int k) {
  if (k < 1 || static_cast<int>(tau.size()) < k) throw config_error("compute_rk needs tau_0..tau_{k-1}");
  multi_diff_cochain out(spec.n, 2);
  for (int i = 0; i < k; ++i) {
    const multi_diff_cochain c = spec.cochain(k - i);
    if (c.is_zero() || component(tau, i).is_zero()) continue;
    out += substitute(component(tau, i), 0, c).lambda_shifted(k - i);
  }
  for (int i = 1; i < k; ++i) out -= weyl_cup(component(tau, i), component(tau, k - i));
  return out;
}

multi_diff_cochain homomorphism_error(const star_product_spec& spec, const std::vector<multi_diff_cochain>& tau,
                                      int max_deg) {
  multi_diff_cochain out(spec.n, 2);
  const int top = static_cast<int>(tau.size()) - 1;
  for (int i = 0; i <= std::min(top, max_deg); ++i) {
    for (int r = 0; i + r <= max_deg; ++r) {
      const multi_diff_cochain c = spec.cochain(r);
      if (c.is_zero() || component(tau, i).is_zero()) continue;
      out += substitute(component(tau, i), 0, c).lambda_shifted(r);
    }
  }
  for (int i = 0; i <= std::min(top, max_deg); ++i) {
    for (int j = 0; j <= std::min(top, max_deg - i); ++j) {
      out -= weyl_cup(component(tau, i), component(tau, j), max_deg);
    }
  }
  return out.truncated(max_deg);
}

multi_diff_cochain homomorphism_defect(const star_product_spec& spec, const tau_map& tau) {
  return homomorphism_error(spec, tau.components, tau.order);
}

tau_map build_tau(const star_product_spec& spec, int order, bool hermitian, const solver_config& config) {
  spec.check_shape();
  if (order < 0) throw config_error("order must be non-negative");
  if (spec.order() < order) {
    throw config_error("star product lists " + std::to_string(spec.order()) + " cochains, fewer than the order " +
                       std::to_string(order));
  }
  solver_config normalized = config;
  normalized.require_nonzero_derivatives = true;
  tau_map tau;
  tau.n = spec.n;
  tau.order = order;
  tau.hermitian = hermitian;
  tau.components.push_back(multi_diff_cochain::identity(spec.n));
  for (int k = 1; k <= order; ++k) {
    tau_stage_report stage;
    stage.k = k;
    stage.rk = compute_rk(spec, tau.components, k);
    stage.error_before = homomorphism_error(spec, tau.components, k).deg_component(k);
    const multi_diff_cochain d = coboundary(stage.rk, coboundary_mode::deformed);
    stage.rk_cocycle = d.is_zero();
    if (!stage.rk_cocycle) throw consistency_error("R_" + std::to_string(k) + " is not a cocycle: " + d.leading_term());
    const multi_diff_cochain a = alt(classical_limit(stage.rk));
    stage.rk_classical_symmetric = a.is_zero();
    if (!stage.rk_classical_symmetric) {
      throw consistency_error("classical part of R_" + std::to_string(k) + " is not symmetric: " + a.leading_term());
    }

    auto attempt = [&](int sign, solver_report& report) -> std::optional<multi_diff_cochain> {
      solver_result r = solve_coboundary(gaussian(sign) * stage.rk, normalized);
      std::vector<multi_diff_cochain> trial = tau.components;
      trial.push_back(r.solution);
      if (!homomorphism_error(spec, trial, k).is_zero()) return std::nullopt;
      report = std::move(r.report);
      return r.solution;
    };

    std::optional<multi_diff_cochain> tk;
    if (tau.report.stage_sign == 0) {
      for (int sign : {1, -1}) {
        tk = attempt(sign, stage.solver);
        if (tk) {
          tau.report.stage_sign = sign;
          break;
        }
      }
      if (!tk) throw consistency_error("no stage sign makes the error vanish at order 1");
    } else {
      tk = attempt(tau.report.stage_sign, stage.solver);
      if (!tk) throw consistency_error("stage sign fixed at order 1 fails at order " + std::to_string(k));
    }
    multi_diff_cochain chosen = *tk;
    if (hermitian) {
      const multi_diff_cochain symmetric = gaussian(rational(1, 2)) * (chosen + involution(chosen));
      stage.hermitian_adjustment = symmetric - chosen;
      stage.hermitian_adjusted = !stage.hermitian_adjustment.is_zero();
      chosen = symmetric;
    } else {
      stage.hermitian_adjustment = multi_diff_cochain(spec.n, 1);
    }
    tau.components.push_back(chosen);
    const multi_diff_cochain err = homomorphism_error(spec, tau.components, k);
    if (!err.is_zero()) {
      throw consistency_error("homomorphism error does not vanish through degree " + std::to_string(k) + ": " +
                              err.leading_term());
    }
    tau.report.stages.push_back(std::move(stage));
  }
  return tau;
}

tau_map closed_form_constant_theta_tau(const rational_matrix& theta, int order) {
  const star_product_spec shape = make_constant_theta_star(theta, 0);
  const int n = shape.n;
  tau_map tau;
  tau.n = n;
  tau.order = order;
  tau.hermitian = true;
  tau.components.push_back(multi_diff_cochain::identity(n));
  std::vector<w_element> shifts;
  for (int i = 0; i < n; ++i) {
    w_element u(n, order);
    for (int j = 0; j < n; ++j) {
      const rational& t = theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (sgn(t) != 0) u += gaussian(rational(-t / 2)) * w_element::p_coordinate(n, order, j);
    }
    shifts.push_back(u);
  }
  const term_layout lw{n, 0};
  const term_layout lc{n, 1};
  for (int k = 1; k <= order; ++k) {
    multi_diff_cochain tk(n, 1);
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
      if (slot == n - 1) {
        alpha[static_cast<std::size_t>(slot)] = remaining;
        w_element prod = w_element::constant(n, order, 1);
        rational denom = 1;
        for (int i = 0; i < n; ++i) {
          for (int e = 0; e < alpha[static_cast<std::size_t>(i)]; ++e) prod = w_multiply(prod, shifts[static_cast<std::size_t>(i)]);
          denom *= factorial(static_cast<unsigned>(alpha[static_cast<std::size_t>(i)]));
        }
        for (const auto& [key, c] : prod.terms()) {
          monomial_key ck;
          for (int i = 0; i < n; ++i) {
            ck[lc.p(i)] = key[lw.p(i)];
            ck[lc.d(0, i)] = static_cast<std::uint8_t>(alpha[static_cast<std::size_t>(i)]);
          }
          tk.add_term(ck, c / gaussian(denom));
        }
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        alpha[static_cast<std::size_t>(slot)] = v;
        self(self, slot + 1, remaining - v);
      }
    };
    rec(rec, 0, k);
    tau.components.push_back(tk);
  }
  return tau;
}

w_element apply_tau(const tau_map& tau, const w_element& f) {
  check_same_dimension(tau.n, f.dimension(), "apply_tau");
  if (!f.is_p_free()) throw config_error("apply_tau expects a p-independent argument");
  const int order = std::min(tau.order, f.order());
  const std::vector<w_element> args{f.with_order(order)};
  w_element out(tau.n, order);
  for (int k = 0; k <= order && k < static_cast<int>(tau.components.size()); ++k) {
    out += evaluate(tau.components[static_cast<std::size_t>(k)], args, order);
  }
  return out;
}

w_element classical_tau(const tau_map& tau, const w_element& f) {
  check_same_dimension(tau.n, f.dimension(), "classical_tau");
  const std::vector<w_element> args{f};
  w_element out(tau.n, tau.order);
  for (const auto& c : tau.components) out += evaluate(classical_limit(c), args, tau.order);
  return out;
}

poisson_realization_report check_poisson_realization(const tau_map& tau, const star_product_spec& spec,
                                                     int basis_degree) {
  check_same_dimension(tau.n, spec.n, "check_poisson_realization");
  poisson_realization_report report;
  const int K = tau.order;
  const auto basis = q_monomials(tau.n, basis_degree, K);
  std::vector<w_element> images;
  for (const auto& f : basis) images.push_back(classical_tau(tau, f));
  for (std::size_t i = 0; i < basis.size() && report.passed; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ++report.pairs_checked;
      const std::vector<w_element> args{basis[i], basis[j]};
      const w_element bracket = evaluate(spec.poisson, args, K);
      const w_element lhs = classical_tau(tau, bracket);
      const w_element rhs = canonical_bracket(images[i], images[j]);
      const w_element diff = lhs - rhs;
      for (int d = 0; d <= K - 1; ++d) {
        if (!p_degree_component(diff, d).is_zero()) {
          report.passed = false;
          report.violation_p_degree = d;
          report.witness = {describe(basis[i]), describe(basis[j]), describe(p_degree_component(diff, d))};
          break;
        }
      }
      if (!report.passed) break;
    }
  }
  return report;
}

}  // namespace dqw
