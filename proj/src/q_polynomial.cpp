#include "dqw/q_polynomial.hpp"

#include "dqw/error.hpp"

namespace dqw {

namespace {

monomial_key key_from(std::span<const int> exponents) {
  monomial_key key;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0 || exponents[k] > 255) throw config_error("exponent out of range");
    key.e[k] = static_cast<std::uint8_t>(exponents[k]);
  }
  return key;
}

}  // namespace

std::vector<int> exponents_of(const monomial_key& key, int offset, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = key[offset + k];
  return out;
}

q_polynomial::q_polynomial(int n) : n_(n) { check_layout({n, 0}); }

q_polynomial q_polynomial::constant(int n, const gaussian& c) {
  q_polynomial out(n);
  terms::add(out.terms_, monomial_key{}, c);
  return out;
}

q_polynomial q_polynomial::monomial(int n, std::span<const int> exponents, const gaussian& c) {
  q_polynomial out(n);
  out.add_term(exponents, c);
  return out;
}

int q_polynomial::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += k[i];
    d = std::max(d, s);
  }
  return d;
}

gaussian q_polynomial::coefficient(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != n_) throw config_error("exponent vector has wrong length");
  auto it = terms_.find(key_from(exponents));
  return it == terms_.end() ? gaussian(0) : it->second;
}

void q_polynomial::add_term(std::span<const int> exponents, const gaussian& c) {
  if (static_cast<int>(exponents.size()) != n_) throw config_error("exponent vector has wrong length");
  terms::add(terms_, key_from(exponents), c);
}

void q_polynomial::add_term(const monomial_key& key, const gaussian& c) { terms::add(terms_, key, c); }

q_polynomial q_polynomial::derivative(int k) const {
  if (k < 0 || k >= n_) throw config_error("variable index out of range");
  q_polynomial out(n_);
  for (const auto& [key, c] : terms_) {
    if (key[k] == 0) continue;
    monomial_key d = key;
    d[k] = static_cast<std::uint8_t>(d[k] - 1);
    terms::add(out.terms_, d, c * gaussian(key[k]));
  }
  return out;
}

gaussian q_polynomial::evaluate(std::span<const rational> point) const {
  if (static_cast<int>(point.size()) != n_) throw config_error("point dimension mismatch");
  gaussian total;
  for (const auto& [key, c] : terms_) {
    rational m = 1;
    for (int k = 0; k < n_; ++k) {
      for (int e = 0; e < key[k]; ++e) m *= point[static_cast<std::size_t>(k)];
    }
    total += c * gaussian(m);
  }
  return total;
}

void q_polynomial::check_same(const q_polynomial& o) const {
  if (n_ != o.n_) throw config_error("dimension mismatch between polynomials");
}

q_polynomial& q_polynomial::operator+=(const q_polynomial& o) {
  check_same(o);
  terms::add_scaled(terms_, o.terms_, 1);
  return *this;
}

q_polynomial& q_polynomial::operator-=(const q_polynomial& o) {
  check_same(o);
  terms::add_scaled(terms_, o.terms_, -1);
  return *this;
}

q_polynomial operator*(const q_polynomial& a, const q_polynomial& b) {
  a.check_same(b);
  q_polynomial out(a.n_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      monomial_key k = ka;
      for (int i = 0; i < a.n_; ++i) {
        int e = ka[i] + kb[i];
        if (e > 255) throw config_error("exponent overflow");
        k[i] = static_cast<std::uint8_t>(e);
      }
      terms::add(out.terms_, k, ca * cb);
    }
  }
  return out;
}

q_polynomial operator*(const gaussian& s, const q_polynomial& a) {
  q_polynomial out(a.n_);
  out.terms_ = terms::scaled(a.terms_, s);
  return out;
}

}  // namespace dqw
