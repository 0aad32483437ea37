#ifndef DQW_TESTS_GENERATOR_HPP
#define DQW_TESTS_GENERATOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dqw/cochain.hpp"
#include "dqw/gaussian.hpp"
#include "dqw/koszul.hpp"
#include "dqw/matrix.hpp"
#include "dqw/w_element.hpp"

namespace dqw::test {

/// Seeded generator with an explicit modulo mapping, so sequences do not
/// depend on the standard library's distribution implementations.
class generator {
 public:
  explicit generator(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  gaussian small_gaussian(int bound = 3) {
    for (;;) {
      const rational re(uniform(-bound, bound), uniform(1, 3));
      const rational im(uniform(-bound, bound), uniform(1, 3));
      gaussian z(re, im);
      if (!z.is_zero()) return z;
    }
  }

  gaussian small_rational(int bound = 3) {
    for (;;) {
      const rational re(uniform(-bound, bound), uniform(1, 3));
      if (sgn(re) != 0) return gaussian(re);
    }
  }

  std::vector<int> exponents(int n, int max_total) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    const int total = uniform(0, max_total);
    for (int t = 0; t < total; ++t) ++e[static_cast<std::size_t>(uniform(0, n - 1))];
    return e;
  }

  /// Random element with terms of total q,p-degree <= max_degree and lambda power <= max_lambda.
  w_element element(int n, int order, int count, int max_degree, int max_lambda = 0, bool with_p = true) {
    w_element out(n, order);
    for (int t = 0; t < count; ++t) {
      const int a = uniform(0, max_lambda);
      std::vector<int> p = with_p ? exponents(n, max_degree) : std::vector<int>(static_cast<std::size_t>(n), 0);
      int used = 0;
      for (int v : p) used += v;
      std::vector<int> q = exponents(n, std::max(0, max_degree - used));
      out += w_element::monomial(n, order, a, p, q, small_gaussian());
    }
    return out;
  }

  w_element function(int n, int order, int count, int max_degree, int max_lambda = 0) {
    return element(n, order, count, max_degree, max_lambda, false);
  }

  /// Square matrix whose entries come from element().
  matrix_w_element matrix(int n, int order, int size, int count, int max_degree, int max_lambda = 0,
                          bool with_p = true) {
    matrix_w_element out(n, order, size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) out.at(i, j) = element(n, order, count, max_degree, max_lambda, with_p);
    }
    return out;
  }

  multi_diff_cochain cochain(int n, int arity, int count, int max_order, int max_q, int max_p, int max_lambda) {
    multi_diff_cochain out(n, arity);
    for (int t = 0; t < count; ++t) {
      std::vector<std::vector<int>> derivs;
      for (int s = 0; s < arity; ++s) derivs.push_back(exponents(n, max_order));
      out.add_term(uniform(0, max_lambda), exponents(n, max_p), exponents(n, max_q), derivs, small_gaussian());
    }
    return out;
  }

  koszul_form form(int n, int degree, int count, int max_p, int max_q) {
    koszul_form out(n, degree);
    for (int t = 0; t < count; ++t) {
      std::vector<int> indices;
      std::vector<int> pool(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
      for (int k = 0; k < degree; ++k) {
        const int j = uniform(k, n - 1);
        std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
        indices.push_back(pool[static_cast<std::size_t>(k)]);
      }
      out.add_term(exponents(n, max_p), exponents(n, max_q), indices, small_gaussian());
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dqw::test

#endif  // DQW_TESTS_GENERATOR_HPP
