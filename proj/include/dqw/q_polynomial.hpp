#ifndef DQW_Q_POLYNOMIAL_HPP
#define DQW_Q_POLYNOMIAL_HPP

#include <span>
#include <vector>

#include "dqw/gaussian.hpp"
#include "dqw/terms.hpp"

namespace dqw {

/// Sparse polynomial in q^1..q^n over Q(i). Keys hold the q-exponents in
/// slots [0, n); zero coefficients are never stored.
class q_polynomial {
 public:
  q_polynomial() = default;
  explicit q_polynomial(int n);

  static q_polynomial constant(int n, const gaussian& c);
  static q_polynomial monomial(int n, std::span<const int> exponents, const gaussian& c = 1);

  int dimension() const noexcept { return n_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  gaussian coefficient(std::span<const int> exponents) const;

  void add_term(std::span<const int> exponents, const gaussian& c);
  void add_term(const monomial_key& key, const gaussian& c);

  q_polynomial derivative(int k) const;
  gaussian evaluate(std::span<const rational> point) const;

  q_polynomial& operator+=(const q_polynomial& o);
  q_polynomial& operator-=(const q_polynomial& o);
  friend q_polynomial operator+(q_polynomial a, const q_polynomial& b) { return a += b; }
  friend q_polynomial operator-(q_polynomial a, const q_polynomial& b) { return a -= b; }
  friend q_polynomial operator*(const q_polynomial& a, const q_polynomial& b);
  friend q_polynomial operator*(const gaussian& s, const q_polynomial& a);
  friend bool operator==(const q_polynomial& a, const q_polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const q_polynomial& o) const;

  int n_ = 0;
  term_map terms_;
};

std::vector<int> exponents_of(const monomial_key& key, int offset, int n);

}  // namespace dqw

#endif  // DQW_Q_POLYNOMIAL_HPP
