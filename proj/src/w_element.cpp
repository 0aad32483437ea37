#include "dqw/w_element.hpp"

#include <algorithm>
#include <string>

#include "dqw/error.hpp"

namespace dqw {

void check_same_dimension(int a, int b, const char* what) {
  if (a != b) {
    throw config_error(std::string("dimension mismatch in ") + what + ": " + std::to_string(a) + " vs " +
                       std::to_string(b));
  }
}

w_element::w_element(int n, int order) : n_(n), order_(order) {
  check_layout({n, 0});
  if (order < 0) throw config_error("truncation order must be non-negative");
}

w_element w_element::constant(int n, int order, const gaussian& c) {
  w_element out(n, order);
  out.add_term(monomial_key{}, c);
  return out;
}

w_element w_element::monomial(int n, int order, int lambda_power, std::span<const int> p,
                              std::span<const int> q, const gaussian& c) {
  w_element out(n, order);
  if (static_cast<int>(p.size()) != n || static_cast<int>(q.size()) != n) {
    throw config_error("monomial exponent vectors must have length n");
  }
  const term_layout l = out.layout();
  monomial_key key;
  auto put = [&key](int slot, int v) {
    if (v < 0 || v > 255) throw config_error("exponent out of range");
    key[slot] = static_cast<std::uint8_t>(v);
  };
  put(0, lambda_power);
  for (int k = 0; k < n; ++k) {
    put(l.p(k), p[static_cast<std::size_t>(k)]);
    put(l.q(k), q[static_cast<std::size_t>(k)]);
  }
  out.add_term(key, c);
  return out;
}

w_element w_element::q_coordinate(int n, int order, int k) {
  if (k < 0 || k >= n) throw config_error("variable index out of range");
  std::vector<int> p(static_cast<std::size_t>(n), 0), q(static_cast<std::size_t>(n), 0);
  q[static_cast<std::size_t>(k)] = 1;
  return monomial(n, order, 0, p, q);
}

w_element w_element::p_coordinate(int n, int order, int k) {
  if (k < 0 || k >= n) throw config_error("variable index out of range");
  std::vector<int> p(static_cast<std::size_t>(n), 0), q(static_cast<std::size_t>(n), 0);
  p[static_cast<std::size_t>(k)] = 1;
  return monomial(n, order, 0, p, q);
}

w_element w_element::lambda(int n, int order) {
  std::vector<int> z(static_cast<std::size_t>(n), 0);
  return monomial(n, order, 1, z, z);
}

w_element w_element::from_terms(int n, int order, term_map terms) {
  w_element out(n, order);
  out.terms_ = terms::truncated(out.layout(), terms, order);
  return out;
}

bool w_element::is_p_free() const {
  const term_layout l = layout();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&l](const auto& t) { return terms::p_degree(l, t.first) == 0; });
}

bool w_element::is_lambda_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first[0] == 0; });
}

int w_element::max_deg() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, terms::deg(layout(), k));
  return d;
}

int w_element::max_total_degree() const {
  const term_layout l = layout();
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, 2 * k[0] + terms::p_degree(l, k) + terms::q_degree(l, k));
  return d;
}

std::map<std::pair<int, std::vector<int>>, q_polynomial> w_element::components() const {
  const term_layout l = layout();
  std::map<std::pair<int, std::vector<int>>, q_polynomial> out;
  for (const auto& [k, c] : terms_) {
    auto [it, inserted] = out.try_emplace({k[0], exponents_of(k, l.p(0), n_)}, n_);
    it->second.add_term(exponents_of(k, l.q(0), n_), c);
  }
  return out;
}

w_element w_element::deg_component(int degree) const {
  w_element out(n_, order_);
  out.terms_ = terms::deg_component(layout(), terms_, degree);
  return out;
}

w_element w_element::with_order(int order) const { return from_terms(n_, order, terms_); }

w_element w_element::conj() const {
  w_element out(n_, order_);
  out.terms_ = terms::conjugated(terms_);
  return out;
}

void w_element::add_term(const monomial_key& key, const gaussian& c) {
  if (terms::deg(layout(), key) > order_) return;
  terms::add(terms_, key, c);
}

void w_element::align(const w_element& o) {
  check_same_dimension(n_, o.n_, "Weyl algebra operation");
  if (o.order_ < order_) {
    order_ = o.order_;
    terms_ = terms::truncated(layout(), terms_, order_);
  }
}

w_element& w_element::operator+=(const w_element& o) {
  align(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

w_element& w_element::operator-=(const w_element& o) {
  align(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

w_element operator-(const w_element& a) {
  w_element out(a.n_, a.order_);
  out.terms_ = terms::negated(a.terms_);
  return out;
}

w_element operator*(const gaussian& s, const w_element& a) {
  w_element out(a.n_, a.order_);
  out.terms_ = terms::scaled(a.terms_, s);
  return out;
}

w_element w_multiply(const w_element& a, const w_element& b) {
  check_same_dimension(a.dimension(), b.dimension(), "w_multiply");
  const int order = std::min(a.order(), b.order());
  return w_element::from_terms(a.dimension(), order,
                               terms::tensor(a.layout(), a.terms(), b.layout(), b.terms(), order));
}

w_element partial_derivative(const w_element& a, variable v) {
  if (v.index < 0 || v.index >= a.dimension()) throw config_error("variable index out of range");
  term_map t = v.kind == variable_kind::q ? terms::dq(a.layout(), a.terms(), v.index)
                                          : terms::dp(a.layout(), a.terms(), v.index);
  return w_element::from_terms(a.dimension(), a.order(), std::move(t));
}

w_element deg_operator(const w_element& a) {
  term_map t;
  for (const auto& [k, c] : a.terms()) terms::add(t, k, c * gaussian(terms::deg(a.layout(), k)));
  return w_element::from_terms(a.dimension(), a.order(), std::move(t));
}

lambda_series evaluate(const w_element& a, std::span<const rational> q_point,
                       std::span<const rational> p_point) {
  const int n = a.dimension();
  if (static_cast<int>(q_point.size()) != n || static_cast<int>(p_point.size()) != n) {
    throw config_error("evaluation point dimension mismatch");
  }
  const term_layout l = a.layout();
  lambda_series out;
  out.coefficients.assign(static_cast<std::size_t>(a.order() + 1), gaussian(0));
  for (const auto& [k, c] : a.terms()) {
    rational m = 1;
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < k[l.q(i)]; ++e) m *= q_point[static_cast<std::size_t>(i)];
      for (int e = 0; e < k[l.p(i)]; ++e) m *= p_point[static_cast<std::size_t>(i)];
    }
    out.coefficients[k[0]] += c * gaussian(m);
  }
  return out;
}

}  // namespace dqw
