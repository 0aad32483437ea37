#include "dqw/koszul.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "dqw/error.hpp"

namespace dqw {

namespace {

int popcount(unsigned mask) { return std::popcount(mask); }

// Number of indices in the mask that are smaller than j.
int below(unsigned mask, int j) { return popcount(mask & ((1u << j) - 1u)); }

}  // namespace

koszul_form::koszul_form(int n, int degree) : n_(n), degree_(degree) {
  check_layout({n, 0});
  if (degree < 0 || degree > n) throw config_error("form degree outside 0..n");
}

void koszul_form::add_term(std::span<const int> p, std::span<const int> q, std::span<const int> indices,
                           const gaussian& c) {
  if (static_cast<int>(p.size()) != n_ || static_cast<int>(q.size()) != n_) {
    throw config_error("form exponent vectors must have length n");
  }
  if (static_cast<int>(indices.size()) != degree_) throw config_error("index count must equal the form degree");
  monomial_key key;
  for (int k = 0; k < n_; ++k) {
    const int pe = p[static_cast<std::size_t>(k)];
    const int qe = q[static_cast<std::size_t>(k)];
    if (pe < 0 || pe > 255 || qe < 0 || qe > 255) throw config_error("exponent out of range");
    key[p_slot(k)] = static_cast<std::uint8_t>(pe);
    key[q_slot(k)] = static_cast<std::uint8_t>(qe);
  }
  unsigned mask = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 0 || i >= n_) throw config_error("form index out of range");
    if (mask & (1u << i)) return;
    // Moving dp_i past the already placed larger indices.
    if ((popcount(mask) - below(mask, i)) % 2 == 1) sign = -sign;
    mask |= 1u << i;
  }
  key[mask_slot()] = static_cast<std::uint8_t>(mask);
  terms::add(terms_, key, sign > 0 ? c : -c);
}

void koszul_form::add_raw(const monomial_key& key, const gaussian& c) {
  if (popcount(key[mask_slot()]) != degree_) throw config_error("raw form term has wrong degree");
  terms::add(terms_, key, c);
}

void koszul_form::check_same(const koszul_form& o) const {
  if (n_ != o.n_ || degree_ != o.degree_) throw config_error("form dimension/degree mismatch");
}

koszul_form& koszul_form::operator+=(const koszul_form& o) {
  check_same(o);
  terms::add_scaled(terms_, o.terms_, 1);
  return *this;
}

koszul_form& koszul_form::operator-=(const koszul_form& o) {
  check_same(o);
  terms::add_scaled(terms_, o.terms_, -1);
  return *this;
}

koszul_form operator*(const gaussian& s, const koszul_form& a) {
  koszul_form out(a.n_, a.degree_);
  out.terms_ = terms::scaled(a.terms_, s);
  return out;
}

std::string koszul_form::describe() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(c) << ')';
    for (int k = 0; k < n_; ++k) {
      if (key[p_slot(k)]) os << " p" << k + 1 << (key[p_slot(k)] > 1 ? "^" + std::to_string(key[p_slot(k)]) : "");
    }
    for (int k = 0; k < n_; ++k) {
      if (key[q_slot(k)]) os << " q" << k + 1 << (key[q_slot(k)] > 1 ? "^" + std::to_string(key[q_slot(k)]) : "");
    }
    for (int k = 0; k < n_; ++k) {
      if (key[mask_slot()] & (1u << k)) os << " dp" << k + 1;
    }
  }
  return os.str();
}

koszul_form d_p(const koszul_form& w) {
  const int n = w.dimension();
  if (w.degree() == n) return koszul_form(n, n);
  koszul_form out(n, w.degree() + 1);
  for (const auto& [key, c] : w.terms()) {
    const unsigned mask = key[w.mask_slot()];
    for (int j = 0; j < n; ++j) {
      const int e = key[w.p_slot(j)];
      if (e == 0 || (mask & (1u << j))) continue;
      monomial_key nk = key;
      nk[w.p_slot(j)] = static_cast<std::uint8_t>(e - 1);
      nk[w.mask_slot()] = static_cast<std::uint8_t>(mask | (1u << j));
      const gaussian coef = c * gaussian(e);
      out.add_raw(nk, below(mask, j) % 2 == 0 ? coef : -coef);
    }
  }
  return out;
}

koszul_form poincare_homotopy(const koszul_form& w) {
  const int n = w.dimension();
  const int k = w.degree();
  if (k == 0) throw config_error("the homotopy is defined on forms of degree at least 1");
  koszul_form out(n, k - 1);
  for (const auto& [key, c] : w.terms()) {
    const unsigned mask = key[w.mask_slot()];
    int weight = k;
    for (int i = 0; i < n; ++i) weight += key[w.p_slot(i)];
    const gaussian scale = c / gaussian(weight);
    int position = 0;
    for (int s = 0; s < n; ++s) {
      if (!(mask & (1u << s))) continue;
      monomial_key nk = key;
      if (key[w.p_slot(s)] == 255) throw config_error("exponent overflow in homotopy");
      nk[w.p_slot(s)] = static_cast<std::uint8_t>(key[w.p_slot(s)] + 1);
      nk[w.mask_slot()] = static_cast<std::uint8_t>(mask & ~(1u << s));
      out.add_raw(nk, position % 2 == 0 ? scale : -scale);
      ++position;
    }
  }
  return out;
}

}  // namespace dqw
