#include "dqw/wick.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "dqw/error.hpp"
#include "dqw/weyl.hpp"

namespace dqw {

namespace {

const gaussian& imag() {
  static const gaussian i = gaussian::imag_unit();
  return i;
}

w_element lambda_power(const w_element& a, int r) {
  if (r == 0) return a;
  term_map out;
  for (const auto& [k, c] : a.terms()) {
    monomial_key key = k;
    const int v = key[0] + r;
    if (v > 255) throw config_error("lambda exponent overflow");
    key[0] = static_cast<std::uint8_t>(v);
    out.emplace_hint(out.end(), key, c);
  }
  return w_element::from_terms(a.dimension(), a.order(), std::move(out));
}

void wick_recurse(const w_element& a, const w_element& b, int k, int r, const gaussian& factor, w_element& out) {
  if (a.is_zero() || b.is_zero() || r > out.order()) return;
  if (k == a.dimension()) {
    out += factor * lambda_power(w_multiply(a, b), r);
    return;
  }
  w_element am = a;
  w_element bm = b;
  gaussian f = factor;
  for (int m = 0; !am.is_zero() && !bm.is_zero() && r + m <= out.order(); ++m) {
    wick_recurse(am, bm, k + 1, r + m, f, out);
    am = dz(am, k);
    bm = dzbar(bm, k);
    f = f * gaussian(2) / gaussian(m + 1);
  }
}

std::vector<w_element> monomial_basis(int n, int degree, int order) {
  std::vector<w_element> out;
  std::vector<int> e(static_cast<std::size_t>(2 * n), 0);
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == 2 * n) {
      std::vector<int> p(e.begin(), e.begin() + n);
      std::vector<int> q(e.begin() + n, e.end());
      out.push_back(w_element::monomial(n, order, 0, p, q));
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

}  // namespace

w_element dz(const w_element& a, int k) {
  return gaussian(rational(1, 2)) *
         (partial_derivative(a, {variable_kind::q, k}) - imag() * partial_derivative(a, {variable_kind::p, k}));
}

w_element dzbar(const w_element& a, int k) {
  return gaussian(rational(1, 2)) *
         (partial_derivative(a, {variable_kind::q, k}) + imag() * partial_derivative(a, {variable_kind::p, k}));
}

w_element wick_product(const w_element& a, const w_element& b) {
  check_same_dimension(a.dimension(), b.dimension(), "wick_product");
  w_element out(a.dimension(), std::min(a.order(), b.order()));
  wick_recurse(a, b, 0, 0, 1, out);
  return out;
}

matrix_w_element wick_product(const matrix_w_element& a, const matrix_w_element& b) {
  return matrix_product(a, b, [](const w_element& x, const w_element& y) { return wick_product(x, y); });
}

w_element laplacian(const w_element& a) {
  w_element out(a.dimension(), a.order());
  for (int k = 0; k < a.dimension(); ++k) {
    const variable q{variable_kind::q, k};
    const variable p{variable_kind::p, k};
    out += partial_derivative(partial_derivative(a, q), q);
    out += partial_derivative(partial_derivative(a, p), p);
  }
  return gaussian(rational(1, 4)) * out;
}

w_element fock_apply(const w_element& a, int sigma, fock_direction direction) {
  if (sigma != 1 && sigma != -1) throw config_error("Fock sign must be +1 or -1");
  const int s = direction == fock_direction::forward ? sigma : -sigma;
  w_element out = a;
  w_element power = a;
  for (int m = 1;; ++m) {
    power = lambda_power(laplacian(power), 1);
    if (power.is_zero()) break;
    power = gaussian(rational(s, m)) * power;
    out += power;
  }
  return out;
}

matrix_w_element fock_apply(const matrix_w_element& a, int sigma, fock_direction direction) {
  return a.map([sigma, direction](const w_element& e) { return fock_apply(e, sigma, direction); });
}

std::vector<fock_sign_check> verify_fock_signs(int n, int basis_degree) {
  if (basis_degree < 1) throw config_error("Fock basis degree must be at least 1");
  const int order = 2 * basis_degree;
  const auto basis = monomial_basis(n, basis_degree, order);
  std::vector<fock_sign_check> out;
  for (int sigma : {1, -1}) {
    fock_sign_check check;
    check.sigma = sigma;
    check.intertwines = true;
    check.preserves_involution = true;
    std::vector<w_element> images;
    images.reserve(basis.size());
    for (const auto& a : basis) {
      images.push_back(fock_apply(a, sigma, fock_direction::forward));
      if (check.preserves_involution && fock_apply(a.conj(), sigma, fock_direction::forward) != images.back().conj()) {
        check.preserves_involution = false;
        check.witness = "involution fails on " + describe(a);
      }
    }
    for (std::size_t i = 0; i < basis.size() && check.intertwines; ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        ++check.pairs_checked;
        const w_element lhs = fock_apply(wick_product(basis[i], basis[j]), sigma, fock_direction::forward);
        const w_element rhs = weyl_product(images[i], images[j]);
        if (lhs != rhs) {
          check.intertwines = false;
          check.witness = "intertwiner fails on (" + describe(basis[i]) + ", " + describe(basis[j]) + ")";
          break;
        }
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

int resolve_fock_sign(int n, int basis_degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, int> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, basis_degree});
    if (it != cache.end()) return it->second;
  }
  const auto checks = verify_fock_signs(n, basis_degree);
  int found = 0;
  int passing = 0;
  std::string witnesses;
  for (const auto& c : checks) {
    if (c.passed()) {
      found = c.sigma;
      ++passing;
    } else {
      witnesses += " sigma=" + std::to_string(c.sigma) + ": " + c.witness + ";";
    }
  }
  if (passing != 1) {
    throw consistency_error("Fock equivalence sign not uniquely determined (" + std::to_string(passing) +
                            " signs pass)" + witnesses);
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::make_pair(n, basis_degree), found);
  return found;
}

fock_result fock_equivalence(const w_element& a, fock_direction direction, int basis_degree) {
  const int sigma = resolve_fock_sign(a.dimension(), basis_degree);
  return {fock_apply(a, sigma, direction), sigma};
}

}  // namespace dqw
