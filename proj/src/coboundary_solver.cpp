#include "dqw/coboundary_solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "dqw/error.hpp"

namespace dqw {

namespace {

using class_key = std::vector<int>;

class_key grading_class(const term_layout& l, const monomial_key& key, coboundary_mode mode) {
  class_key out;
  if (mode == coboundary_mode::deformed) {
    out.push_back(terms::deg(l, key));
  } else {
    out.push_back(key[0]);
    for (int k = 0; k < l.n; ++k) out.push_back(key[l.p(k)]);
  }
  for (int k = 0; k < l.n; ++k) {
    int w = key[l.q(k)] - key[l.p(k)];
    for (int s = 0; s < l.arity; ++s) w -= key[l.d(s, k)];
    out.push_back(w);
  }
  return out;
}

std::string describe_class(const class_key& c, int n, coboundary_mode mode) {
  std::ostringstream os;
  std::size_t i = 0;
  if (mode == coboundary_mode::deformed) {
    os << "deg=" << c[i++];
  } else {
    os << "lambda^" << c[i++] << " p=(";
    for (int k = 0; k < n; ++k) os << (k ? "," : "") << c[i++];
    os << ')';
  }
  os << " weight=(";
  for (int k = 0; k < n; ++k) os << (k ? "," : "") << c[i++];
  os << ')';
  return os.str();
}

// All multi-indices of length n with entries summing to at most max_total.
void multi_indices(int n, int max_total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= max_total; ++v) {
    cur.push_back(v);
    multi_indices(n, max_total - v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> multi_indices(int n, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (max_total >= 0) multi_indices(n, max_total, cur, out);
  return out;
}

// Splits the per-coordinate derivative totals among `slots` arguments.
void distribute(const term_layout& lu, const std::vector<int>& totals, int coord, monomial_key& key,
                bool nonzero, std::vector<monomial_key>& out) {
  if (coord == lu.n) {
    if (nonzero) {
      for (int s = 0; s < lu.arity; ++s) {
        if (terms::derivative_order(lu, key, s) == 0) return;
      }
    }
    out.push_back(key);
    return;
  }
  const int total = totals[static_cast<std::size_t>(coord)];
  if (lu.arity == 0) {
    if (total == 0) distribute(lu, totals, coord + 1, key, nonzero, out);
    return;
  }
  std::vector<int> parts(static_cast<std::size_t>(lu.arity), 0);
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == lu.arity - 1) {
      parts[static_cast<std::size_t>(slot)] = remaining;
      for (int s = 0; s < lu.arity; ++s) key[lu.d(s, coord)] = static_cast<std::uint8_t>(parts[static_cast<std::size_t>(s)]);
      distribute(lu, totals, coord + 1, key, nonzero, out);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  for (int s = 0; s < lu.arity; ++s) key[lu.d(s, coord)] = 0;
}

std::vector<monomial_key> ansatz(const term_layout& lu, const class_key& c, coboundary_mode mode, int max_order,
                                 int max_q, bool nonzero) {
  const int n = lu.n;
  std::vector<std::pair<int, std::vector<int>>> lambda_p;
  std::size_t w_offset;
  if (mode == coboundary_mode::deformed) {
    const int d = c[0];
    for (int a = 0; a <= d; ++a) {
      for (auto& idx : multi_indices(n, d - a)) {
        int sum = 0;
        for (int v : idx) sum += v;
        if (sum == d - a) lambda_p.emplace_back(a, idx);
      }
    }
    w_offset = 1;
  } else {
    lambda_p.emplace_back(c[0], std::vector<int>(c.begin() + 1, c.begin() + 1 + n));
    w_offset = 1 + static_cast<std::size_t>(n);
  }
  const auto q_candidates = multi_indices(n, max_q);
  std::vector<monomial_key> out;
  for (const auto& [a, p] : lambda_p) {
    for (const auto& q : q_candidates) {
      std::vector<int> totals(static_cast<std::size_t>(n));
      int order = 0;
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        totals[kk] = q[kk] - c[w_offset + kk] - p[kk];
        ok = totals[kk] >= 0;
        order += totals[kk];
      }
      if (!ok || order > max_order) continue;
      if (nonzero && order < lu.arity) continue;
      monomial_key key;
      key[0] = static_cast<std::uint8_t>(a);
      for (int k = 0; k < n; ++k) {
        key[lu.p(k)] = static_cast<std::uint8_t>(p[static_cast<std::size_t>(k)]);
        key[lu.q(k)] = static_cast<std::uint8_t>(q[static_cast<std::size_t>(k)]);
      }
      distribute(lu, totals, 0, key, nonzero, out);
    }
  }
  std::sort(out.begin(), out.end(), [&lu](const monomial_key& x, const monomial_key& y) {
    return std::make_tuple(terms::derivative_order(lu, x), terms::q_degree(lu, x), x) <
           std::make_tuple(terms::derivative_order(lu, y), terms::q_degree(lu, y), y);
  });
  return out;
}

void check_preconditions(const multi_diff_cochain& target, coboundary_mode mode) {
  const multi_diff_cochain d = coboundary(target, mode);
  if (!d.is_zero()) throw precondition_error("target is not a cocycle", d.leading_term());
  if (target.arity() >= 2) {
    const multi_diff_cochain a =
        alt(mode == coboundary_mode::deformed ? classical_limit(target) : target);
    if (!a.is_zero()) {
      throw precondition_error("antisymmetrized classical part does not vanish", a.leading_term());
    }
  }
}

multi_diff_cochain graded_solve(const multi_diff_cochain& target, coboundary_mode mode, const solver_config& config,
                                solver_report& report) {
  const int n = target.dimension();
  const term_layout lt = target.layout();
  const term_layout lu{n, target.arity() - 1};
  std::map<class_key, term_map> classes;
  for (const auto& [key, c] : target.terms()) classes[grading_class(lt, key, mode)].emplace(key, c);
  report.classes += static_cast<int>(classes.size());

  multi_diff_cochain psi(n, lu.arity);
  for (const auto& [cls, part] : classes) {
    int base_order = 0;
    int base_q = 0;
    for (const auto& [key, c] : part) {
      base_order = std::max(base_order, terms::derivative_order(lt, key));
      base_q = std::max(base_q, terms::q_degree(lt, key));
    }
    bool solved = false;
    for (int s = std::max(config.slack, 0);; s = std::max(1, 2 * s)) {
      solver_attempt attempt;
      attempt.grading_class = describe_class(cls, n, mode);
      attempt.slack = s;
      attempt.max_derivative_order = base_order + s;
      attempt.max_q_degree = base_q + s;
      const auto keys = ansatz(lu, cls, mode, attempt.max_derivative_order, attempt.max_q_degree,
                               config.require_nonzero_derivatives);
      sparse_eliminator elim(config.max_cells);
      std::map<monomial_key, bool> rows;
      for (std::size_t id = 0; id < keys.size(); ++id) {
        multi_diff_cochain column(n, lu.arity);
        column.add_term(keys[id], 1);
        const multi_diff_cochain image = coboundary(column, mode);
        for (const auto& [k, c] : image.terms()) rows.emplace(k, true);
        elim.add_column(static_cast<int>(id), image.terms());
      }
      for (const auto& [k, c] : part) rows.emplace(k, true);
      attempt.columns = keys.size();
      attempt.rows = rows.size();
      attempt.rank = elim.rank();
      const auto x = elim.solve(part);
      attempt.feasible = x.has_value();
      report.attempts.push_back(attempt);
      report.max_slack_used = std::max(report.max_slack_used, s);
      if (x) {
        for (const auto& [id, c] : *x) psi.add_term(keys[static_cast<std::size_t>(id)], c);
        solved = true;
        break;
      }
      if (s >= config.max_slack) break;
    }
    if (!solved) {
      std::ostringstream os;
      os << "no coboundary solution for class " << describe_class(cls, n, mode) << " with slack up to "
         << config.max_slack << " (tried:";
      for (const auto& a : report.attempts) {
        if (a.grading_class == describe_class(cls, n, mode)) {
          os << " [order<=" << a.max_derivative_order << ", q-degree<=" << a.max_q_degree << ", "
             << a.columns << " columns, rank " << a.rank << ']';
        }
      }
      os << ')';
      throw solver_exhausted(os.str());
    }
  }
  return psi;
}

void certify(const multi_diff_cochain& psi, const multi_diff_cochain& target, coboundary_mode mode) {
  const multi_diff_cochain defect = coboundary(psi, mode) - target;
  if (!defect.is_zero()) throw consistency_error("coboundary certificate failed: " + defect.leading_term());
}

}  // namespace

solver_result solve_hochschild(const multi_diff_cochain& target, coboundary_mode mode, const solver_config& config) {
  if (target.arity() < 1) throw config_error("coboundary targets need arity at least 1");
  check_preconditions(target, mode);
  solver_result result;
  result.solution = multi_diff_cochain(target.dimension(), target.arity() - 1);
  if (target.is_zero()) return result;
  multi_diff_cochain remainder = target;
  if (config.lambda_stripping && mode == coboundary_mode::deformed) {
    result.report.lambda_stripping = true;
    const multi_diff_cochain classical = classical_limit(target);
    if (!classical.is_zero()) {
      const multi_diff_cochain psi0 = graded_solve(classical, coboundary_mode::classical, config, result.report);
      result.solution += psi0;
      remainder -= coboundary(psi0, coboundary_mode::deformed);
    }
  }
  if (!remainder.is_zero()) result.solution += graded_solve(remainder, mode, config, result.report);
  certify(result.solution, target, mode);
  return result;
}

solver_result solve_coboundary(const multi_diff_cochain& phi, const solver_config& config) {
  if (phi.arity() != 2) throw config_error("solve_coboundary expects an arity-2 cochain");
  if (phi.is_zero()) return {multi_diff_cochain(phi.dimension(), 1), {}};
  const int d = phi.max_deg();
  if (!phi.is_deg_homogeneous(d)) throw config_error("solve_coboundary expects a deg-homogeneous cochain");
  solver_result result = solve_hochschild(phi, coboundary_mode::deformed, config);
  if (!result.solution.is_deg_homogeneous(d)) throw consistency_error("solver returned an inhomogeneous cochain");
  return result;
}

solver_result solve_classical_stage(const multi_diff_cochain& phi, const solver_config& config) {
  return solve_hochschild(classical_limit(phi), coboundary_mode::classical, config);
}

}  // namespace dqw
