#include "dqw/cochain.hpp"

#include <algorithm>
#include <numeric>

#include "dqw/error.hpp"

namespace dqw {

multi_diff_cochain::multi_diff_cochain(int n, int arity) : n_(n), arity_(arity) { check_layout({n, arity}); }

multi_diff_cochain multi_diff_cochain::identity(int n) {
  multi_diff_cochain out(n, 1);
  out.add_term(monomial_key{}, 1);
  return out;
}

multi_diff_cochain multi_diff_cochain::product(int n) {
  multi_diff_cochain out(n, 2);
  out.add_term(monomial_key{}, 1);
  return out;
}

multi_diff_cochain multi_diff_cochain::from_terms(int n, int arity, term_map terms) {
  multi_diff_cochain out(n, arity);
  out.terms_ = std::move(terms);
  return out;
}

void multi_diff_cochain::add_term(const monomial_key& key, const gaussian& c) { terms::add(terms_, key, c); }

void multi_diff_cochain::add_term(int lambda_power, std::span<const int> p, std::span<const int> q,
                                  const std::vector<std::vector<int>>& derivs, const gaussian& c) {
  if (static_cast<int>(p.size()) != n_ || static_cast<int>(q.size()) != n_ ||
      static_cast<int>(derivs.size()) != arity_) {
    throw config_error("cochain term shape does not match dimension/arity");
  }
  const term_layout l = layout();
  monomial_key key;
  auto put = [&key](int slot, int v) {
    if (v < 0 || v > 255) throw config_error("exponent out of range");
    key[slot] = static_cast<std::uint8_t>(v);
  };
  put(0, lambda_power);
  for (int k = 0; k < n_; ++k) {
    put(l.p(k), p[static_cast<std::size_t>(k)]);
    put(l.q(k), q[static_cast<std::size_t>(k)]);
  }
  for (int s = 0; s < arity_; ++s) {
    const auto& j = derivs[static_cast<std::size_t>(s)];
    if (static_cast<int>(j.size()) != n_) throw config_error("derivative multi-index has wrong length");
    for (int k = 0; k < n_; ++k) put(l.d(s, k), j[static_cast<std::size_t>(k)]);
  }
  add_term(key, c);
}

int multi_diff_cochain::max_deg() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, terms::deg(layout(), k));
  return d;
}

int multi_diff_cochain::max_derivative_order() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, terms::derivative_order(layout(), k));
  return d;
}

int multi_diff_cochain::max_q_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, terms::q_degree(layout(), k));
  return d;
}

int multi_diff_cochain::max_lambda_power() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k[0]));
  return d;
}

bool multi_diff_cochain::is_deg_homogeneous(int d) const {
  const term_layout l = layout();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return terms::deg(l, t.first) == d; });
}

bool multi_diff_cochain::is_p_free() const {
  const term_layout l = layout();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return terms::p_degree(l, t.first) == 0; });
}

multi_diff_cochain multi_diff_cochain::deg_component(int degree) const {
  return from_terms(n_, arity_, terms::deg_component(layout(), terms_, degree));
}

multi_diff_cochain multi_diff_cochain::truncated(int max_deg) const {
  return from_terms(n_, arity_, terms::truncated(layout(), terms_, max_deg));
}

multi_diff_cochain multi_diff_cochain::lambda_shifted(int r) const {
  term_map out;
  for (const auto& [k, c] : terms_) {
    monomial_key key = k;
    const int v = key[0] + r;
    if (v < 0 || v > 255) throw config_error("lambda exponent out of range");
    key[0] = static_cast<std::uint8_t>(v);
    out.emplace_hint(out.end(), key, c);
  }
  return from_terms(n_, arity_, std::move(out));
}

void multi_diff_cochain::check_same(const multi_diff_cochain& o) const {
  if (n_ != o.n_ || arity_ != o.arity_) throw config_error("cochain dimension/arity mismatch");
}

multi_diff_cochain& multi_diff_cochain::operator+=(const multi_diff_cochain& o) {
  check_same(o);
  terms::add_scaled(terms_, o.terms_, 1);
  return *this;
}

multi_diff_cochain& multi_diff_cochain::operator-=(const multi_diff_cochain& o) {
  check_same(o);
  terms::add_scaled(terms_, o.terms_, -1);
  return *this;
}

multi_diff_cochain operator*(const gaussian& s, const multi_diff_cochain& a) {
  return multi_diff_cochain::from_terms(a.n_, a.arity_, terms::scaled(a.terms_, s));
}

std::string multi_diff_cochain::leading_term() const {
  if (terms_.empty()) return "0";
  return terms::describe(layout(), terms_.begin()->first, terms_.begin()->second);
}

multi_diff_cochain coboundary(const multi_diff_cochain& phi, coboundary_mode mode) {
  const int n = phi.dimension();
  const int k = phi.arity();
  if (k + 1 > kMaxArity) throw config_error("coboundary would exceed the supported arity");
  const multi_diff_cochain id = multi_diff_cochain::identity(n);
  auto cup = [mode](const multi_diff_cochain& a, const multi_diff_cochain& b) {
    return mode == coboundary_mode::deformed ? weyl_cup(a, b) : pointwise_cup(a, b);
  };
  multi_diff_cochain out = cup(id, phi);
  const multi_diff_cochain mult = multi_diff_cochain::product(n);
  for (int i = 1; i <= k; ++i) {
    multi_diff_cochain inner = substitute(phi, i - 1, mult);
    if (i % 2 == 0) {
      out += inner;
    } else {
      out -= inner;
    }
  }
  multi_diff_cochain right = cup(phi, id);
  if ((k + 1) % 2 == 0) {
    out += right;
  } else {
    out -= right;
  }
  return out;
}

multi_diff_cochain permute_arguments(const multi_diff_cochain& phi, std::span<const int> perm) {
  const int k = phi.arity();
  if (static_cast<int>(perm.size()) != k) throw config_error("permutation length must equal arity");
  const term_layout l = phi.layout();
  term_map out;
  for (const auto& [key, c] : phi.terms()) {
    monomial_key nk = key;
    for (int s = 0; s < k; ++s) {
      const int target = perm[static_cast<std::size_t>(s)];
      for (int i = 0; i < l.n; ++i) nk[l.d(target, i)] = key[l.d(s, i)];
    }
    terms::add(out, nk, c);
  }
  return multi_diff_cochain::from_terms(phi.dimension(), k, std::move(out));
}

multi_diff_cochain alt(const multi_diff_cochain& phi) {
  const int k = phi.arity();
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  multi_diff_cochain out(phi.dimension(), k);
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    }
    multi_diff_cochain term = permute_arguments(phi, perm);
    if (inversions % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return gaussian(rational(1) / factorial(static_cast<unsigned>(k))) * out;
}

multi_diff_cochain classical_limit(const multi_diff_cochain& phi) {
  term_map out;
  for (const auto& [k, c] : phi.terms()) {
    if (k[0] == 0) out.emplace_hint(out.end(), k, c);
  }
  return multi_diff_cochain::from_terms(phi.dimension(), phi.arity(), std::move(out));
}

multi_diff_cochain involution(const multi_diff_cochain& phi) {
  const int k = phi.arity();
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) perm[static_cast<std::size_t>(s)] = k - 1 - s;
  multi_diff_cochain reversed = permute_arguments(phi, perm);
  return multi_diff_cochain::from_terms(phi.dimension(), k, terms::conjugated(reversed.terms()));
}

multi_diff_cochain weyl_cup(const multi_diff_cochain& a, const multi_diff_cochain& b, int max_deg) {
  check_same_dimension(a.dimension(), b.dimension(), "weyl_cup");
  if (a.arity() + b.arity() > kMaxArity) throw config_error("cup product would exceed the supported arity");
  return multi_diff_cochain::from_terms(a.dimension(), a.arity() + b.arity(),
                                        terms::weyl_cup(a.layout(), a.terms(), b.layout(), b.terms(), max_deg));
}

multi_diff_cochain pointwise_cup(const multi_diff_cochain& a, const multi_diff_cochain& b, int max_deg) {
  check_same_dimension(a.dimension(), b.dimension(), "pointwise_cup");
  if (a.arity() + b.arity() > kMaxArity) throw config_error("cup product would exceed the supported arity");
  return multi_diff_cochain::from_terms(a.dimension(), a.arity() + b.arity(),
                                        terms::tensor(a.layout(), a.terms(), b.layout(), b.terms(), max_deg));
}

multi_diff_cochain substitute(const multi_diff_cochain& phi, int slot, const multi_diff_cochain& chi) {
  check_same_dimension(phi.dimension(), chi.dimension(), "substitute");
  const int arity = phi.arity() - 1 + chi.arity();
  if (arity > kMaxArity) throw config_error("substitution would exceed the supported arity");
  return multi_diff_cochain::from_terms(phi.dimension(), arity,
                                        terms::substitute(phi.layout(), phi.terms(), slot, chi.layout(), chi.terms()));
}

w_element evaluate(const multi_diff_cochain& phi, std::span<const w_element> args, int order) {
  const int n = phi.dimension();
  const int k = phi.arity();
  if (static_cast<int>(args.size()) != k) throw config_error("wrong number of cochain arguments");
  for (const auto& a : args) check_same_dimension(n, a.dimension(), "cochain evaluation");
  const term_layout l = phi.layout();
  const term_layout lw{n, 0};
  std::vector<std::map<monomial_key, w_element>> cache(static_cast<std::size_t>(k));
  auto derivative = [&](int s, const monomial_key& key) -> const w_element& {
    monomial_key multi;
    for (int i = 0; i < n; ++i) multi[i] = key[l.d(s, i)];
    auto& c = cache[static_cast<std::size_t>(s)];
    auto it = c.find(multi);
    if (it == c.end()) {
      const w_element& a = args[static_cast<std::size_t>(s)];
      it = c.emplace(multi, w_element::from_terms(n, order, terms::dq_multi(lw, a.terms(), multi, 0))).first;
    }
    return it->second;
  };
  w_element out(n, order);
  for (const auto& [key, c] : phi.terms()) {
    monomial_key mono;
    mono[0] = key[0];
    for (int i = 0; i < n; ++i) {
      mono[lw.p(i)] = key[l.p(i)];
      mono[lw.q(i)] = key[l.q(i)];
    }
    if (terms::deg(lw, mono) > order) continue;
    w_element value = w_element::from_terms(n, order, term_map{{mono, c}});
    for (int s = 0; s < k && !value.is_zero(); ++s) value = w_multiply(value, derivative(s, key));
    out += value;
  }
  return out;
}

}  // namespace dqw
