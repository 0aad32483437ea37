#include "dqw/star_product.hpp"

#include <algorithm>

#include "dqw/error.hpp"

namespace dqw {

namespace {

const gaussian& half_i() {
  static const gaussian h{rational(0), rational(1, 2)};
  return h;
}

void check_theta(const rational_matrix& theta) {
  const std::size_t n = theta.size();
  for (const auto& row : theta) {
    if (row.size() != n) throw config_error("theta must be a square matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (theta[i][j] != -theta[j][i]) throw config_error("theta must be antisymmetric");
    }
  }
}

// Product of constant-coefficient symbols: exponents of every slot add.
multi_diff_cochain symbol_product(const multi_diff_cochain& a, const multi_diff_cochain& b) {
  const term_layout l = a.layout();
  multi_diff_cochain out(a.dimension(), a.arity());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      monomial_key key;
      for (int s = 0; s < l.width(); ++s) {
        const int v = ka[s] + kb[s];
        if (v > 255) throw config_error("exponent overflow in symbol product");
        key[s] = static_cast<std::uint8_t>(v);
      }
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

multi_diff_cochain biderivation(int n, int i, int j, const gaussian& c, std::vector<int> q = {}) {
  std::vector<int> zero(static_cast<std::size_t>(n), 0);
  if (q.empty()) q = zero;
  std::vector<int> di = zero;
  std::vector<int> dj = zero;
  ++di[static_cast<std::size_t>(i)];
  ++dj[static_cast<std::size_t>(j)];
  multi_diff_cochain out(n, 2);
  out.add_term(0, zero, q, {di, dj}, c);
  return out;
}

multi_diff_cochain unary(int n, std::vector<int> q, std::vector<int> d, const gaussian& c = 1) {
  multi_diff_cochain out(n, 1);
  out.add_term(0, std::vector<int>(static_cast<std::size_t>(n), 0), q, {d}, c);
  return out;
}

bool slot_free(const term_layout& l, const monomial_key& key) {
  for (int s = 0; s < l.arity; ++s) {
    if (terms::derivative_order(l, key, s) == 0) return true;
  }
  return false;
}

// A term of the cochain that is minimal for the componentwise order of its
// derivative lists; evaluating on x^{J_1}, .., x^{J_k} isolates it.
std::vector<w_element> witness_arguments(const multi_diff_cochain& c, int basis_degree) {
  const term_layout l = c.layout();
  std::vector<monomial_key> order;
  for (const auto& [k, v] : c.terms()) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&l](const monomial_key& a, const monomial_key& b) {
    return terms::derivative_order(l, a) < terms::derivative_order(l, b);
  });
  for (const auto& key : order) {
    std::vector<w_element> args;
    bool within = true;
    for (int s = 0; s < l.arity; ++s) {
      std::vector<int> e(static_cast<std::size_t>(l.n));
      for (int k = 0; k < l.n; ++k) e[static_cast<std::size_t>(k)] = key[l.d(s, k)];
      if (basis_degree >= 0 && terms::derivative_order(l, key, s) > basis_degree) within = false;
      args.push_back(w_element::monomial(l.n, 0, 0, std::vector<int>(static_cast<std::size_t>(l.n), 0), e));
    }
    if (!within) continue;
    if (!evaluate(c, args, c.max_deg() < 0 ? 0 : c.max_deg()).is_zero()) return args;
  }
  return {};
}

std::string describe_value(const w_element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : a.terms()) out += (out.empty() ? "" : " + ") + terms::describe(a.layout(), k, c);
  return out;
}

void record(star_validation_report& report, int m, const std::string& what, const multi_diff_cochain& defect,
            int basis_degree) {
  if (report.first_violated_order == 0) {
    report.first_violated_order = m;
    report.violation = what;
    const auto args = witness_arguments(defect, basis_degree);
    for (const auto& a : args) report.witness.push_back(describe_value(a));
    if (!args.empty()) {
      report.witness_value = describe_value(evaluate(defect, args, std::max(defect.max_deg(), 0)));
    } else {
      report.witness_value = defect.leading_term();
    }
  }
}

}  // namespace

multi_diff_cochain star_product_spec::cochain(int r) const {
  if (r == 0) return multi_diff_cochain::product(n);
  if (r <= order()) return cochains[static_cast<std::size_t>(r - 1)];
  return multi_diff_cochain(n, 2);
}

void star_product_spec::check_shape() const {
  check_layout({n, 2});
  for (const auto& c : cochains) {
    if (c.dimension() != n || c.arity() != 2) throw config_error("star product cochains must be bidifferential");
    if (c.max_lambda_power() != 0 || !c.is_p_free()) {
      throw config_error("star product cochains must be lambda- and p-independent");
    }
  }
  if (poisson.dimension() != n || poisson.arity() != 2) throw config_error("Poisson structure must be a biderivation");
  if (theta) check_theta(*theta);
}

star_product_spec make_constant_theta_star(const rational_matrix& theta, int order) {
  check_theta(theta);
  const int n = static_cast<int>(theta.size());
  if (order < 0) throw config_error("order must be non-negative");
  star_product_spec spec;
  spec.n = n;
  spec.hermitian = true;
  spec.theta = theta;
  multi_diff_cochain base(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const rational& t = theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (sgn(t) != 0) base += biderivation(n, i, j, gaussian(t));
    }
  }
  spec.poisson = base;
  multi_diff_cochain power = multi_diff_cochain::product(n);
  gaussian factor = 1;
  for (int r = 1; r <= order; ++r) {
    power = symbol_product(power, base);
    factor = factor * half_i() / gaussian(r);
    spec.cochains.push_back(factor * power);
  }
  return spec;
}

star_product_spec make_zero_star(int n, int order) {
  return make_constant_theta_star(rational_matrix(static_cast<std::size_t>(n), std::vector<rational>(static_cast<std::size_t>(n))),
                                  order);
}

multi_diff_cochain associativity_defect(const star_product_spec& spec, int m) {
  multi_diff_cochain out(spec.n, 3);
  for (int i = 0; i <= m; ++i) {
    const multi_diff_cochain ci = spec.cochain(i);
    const multi_diff_cochain cj = spec.cochain(m - i);
    if (ci.is_zero() || cj.is_zero()) continue;
    out += substitute(ci, 0, cj);
    out -= substitute(ci, 1, cj);
  }
  return out;
}

star_product_spec make_linear_poisson_2d_star(int order, const solver_config& config) {
  if (order < 0) throw config_error("order must be non-negative");
  const int n = 2;
  star_product_spec spec;
  spec.n = n;
  spec.hermitian = true;
  spec.poisson = biderivation(n, 0, 1, 1, {1, 0}) - biderivation(n, 1, 0, 1, {1, 0});
  if (order >= 1) spec.cochains.push_back(half_i() * spec.poisson);
  solver_config normalized = config;
  normalized.require_nonzero_derivatives = true;
  for (int r = 2; r <= order; ++r) {
    // With C_r still absent, the order-r defect is the part coming from lower orders.
    const multi_diff_cochain target = associativity_defect(spec, r);
    multi_diff_cochain c = solve_hochschild(target, coboundary_mode::classical, normalized).solution;
    c = gaussian(rational(1, 2)) * (c + involution(c));
    if (coboundary(c, coboundary_mode::classical) != target) {
      throw consistency_error("Hermitian symmetrization broke the associativity equation at order " +
                              std::to_string(r));
    }
    spec.cochains.push_back(c);
  }
  return spec;
}

star_product_spec make_linear_poisson_2d_twist(int order) {
  const int n = 2;
  star_product_spec spec;
  spec.n = n;
  spec.hermitian = true;
  spec.poisson = biderivation(n, 0, 1, 1, {1, 0}) - biderivation(n, 1, 0, 1, {1, 0});
  const multi_diff_cochain x = unary(n, {1, 0}, {1, 0});
  const multi_diff_cochain y = unary(n, {0, 0}, {0, 1});
  std::vector<multi_diff_cochain> xp{multi_diff_cochain::identity(n)};
  std::vector<multi_diff_cochain> yp{multi_diff_cochain::identity(n)};
  for (int r = 1; r <= order; ++r) {
    xp.push_back(substitute(x, 0, xp.back()));
    yp.push_back(substitute(y, 0, yp.back()));
  }
  gaussian factor = 1;
  for (int r = 1; r <= order; ++r) {
    factor = factor * half_i() / gaussian(r);
    multi_diff_cochain c(n, 2);
    for (int k = 0; k <= r; ++k) {
      const multi_diff_cochain left = substitute(xp[static_cast<std::size_t>(k)], 0, yp[static_cast<std::size_t>(r - k)]);
      const multi_diff_cochain right = substitute(yp[static_cast<std::size_t>(k)], 0, xp[static_cast<std::size_t>(r - k)]);
      gaussian b(binomial(static_cast<unsigned>(r), static_cast<unsigned>(k)));
      if ((r - k) % 2 == 1) b = -b;
      c += b * pointwise_cup(left, right);
    }
    spec.cochains.push_back(factor * c);
  }
  return spec;
}

w_element star_apply(const star_product_spec& spec, const w_element& f, const w_element& g) {
  check_same_dimension(spec.n, f.dimension(), "star_apply");
  check_same_dimension(spec.n, g.dimension(), "star_apply");
  if (!f.is_p_free() || !g.is_p_free()) throw config_error("star_apply expects p-independent arguments");
  const int order = std::min(f.order(), g.order());
  const std::vector<w_element> args{f, g};
  const std::vector<int> zero(static_cast<std::size_t>(spec.n), 0);
  w_element out(spec.n, order);
  for (int r = 0; r <= std::min(order, spec.order()); ++r) {
    const multi_diff_cochain c = spec.cochain(r);
    if (c.is_zero()) continue;
    out += w_multiply(w_element::monomial(spec.n, order, r, zero, zero), evaluate(c, args, order));
  }
  return out;
}

matrix_w_element star_apply(const star_product_spec& spec, const matrix_w_element& f, const matrix_w_element& g) {
  return matrix_product(f, g, [&spec](const w_element& a, const w_element& b) { return star_apply(spec, a, b); });
}

star_validation_report validate_star(const star_product_spec& spec, int order, int basis_degree) {
  spec.check_shape();
  star_validation_report report;
  report.order = order;
  for (int m = 1; m <= order && report.first_violated_order == 0; ++m) {
    const multi_diff_cochain c = spec.cochain(m);
    const term_layout l = c.layout();
    multi_diff_cochain free_slots(spec.n, 2);
    for (const auto& [k, v] : c.terms()) {
      if (slot_free(l, k)) free_slots.add_term(k, v);
    }
    if (!free_slots.is_zero()) {
      report.unital = false;
      record(report, m, "unitality", free_slots, basis_degree);
    }
    if (m == 1) {
      const std::vector<int> swap{1, 0};
      const multi_diff_cochain defect =
          c - permute_arguments(c, swap) - gaussian::imag_unit() * spec.poisson;
      if (!defect.is_zero()) {
        report.poisson_compatible = false;
        record(report, m, "poisson", defect, basis_degree);
      }
    }
    if (spec.hermitian) {
      const multi_diff_cochain defect = c - involution(c);
      if (!defect.is_zero()) {
        report.hermitian = false;
        record(report, m, "hermitian", defect, basis_degree);
      }
    }
    const multi_diff_cochain defect = associativity_defect(spec, m);
    if (!defect.is_zero()) {
      report.associative = false;
      record(report, m, "associativity", defect, basis_degree);
    }
  }
  return report;
}

w_element pi_star(const w_element& f) {
  if (!f.is_p_free()) throw config_error("pi_star expects a p-independent element");
  return f;
}

w_element iota_star(const w_element& a) {
  term_map out;
  for (const auto& [k, c] : a.terms()) {
    if (terms::p_degree(a.layout(), k) == 0) out.emplace_hint(out.end(), k, c);
  }
  return w_element::from_terms(a.dimension(), a.order(), std::move(out));
}

matrix_w_element iota_star(const matrix_w_element& a) {
  return a.map([](const w_element& e) { return iota_star(e); });
}

}  // namespace dqw
