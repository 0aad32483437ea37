#ifndef DQW_W_ELEMENT_HPP
#define DQW_W_ELEMENT_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "dqw/gaussian.hpp"
#include "dqw/lambda_series.hpp"
#include "dqw/q_polynomial.hpp"
#include "dqw/terms.hpp"

namespace dqw {

enum class variable_kind { q, p };

struct variable {
  variable_kind kind;
  int index;
};

/// Element of the truncated formal Weyl algebra C[q][[p, lambda]] in n
/// pairs of variables. Terms of degree lambda-power + p-degree above the
/// truncation order are discarded. Functions on R^n (no p) use the same type.
class w_element {
 public:
  w_element() = default;
  w_element(int n, int order);

  static w_element constant(int n, int order, const gaussian& c);
  static w_element monomial(int n, int order, int lambda_power, std::span<const int> p,
                            std::span<const int> q, const gaussian& c = 1);
  static w_element q_coordinate(int n, int order, int k);
  static w_element p_coordinate(int n, int order, int k);
  static w_element lambda(int n, int order);
  /// Wraps raw terms, dropping those above the order.
  static w_element from_terms(int n, int order, term_map terms);

  int dimension() const noexcept { return n_; }
  int order() const noexcept { return order_; }
  term_layout layout() const noexcept { return {n_, 0}; }
  const term_map& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_p_free() const;
  bool is_lambda_free() const;
  int max_deg() const;
  /// Polynomial degree counting q and p with weight 1 and lambda with weight 2.
  int max_total_degree() const;

  /// (lambda-power, p-exponent) -> coefficient polynomial in q.
  std::map<std::pair<int, std::vector<int>>, q_polynomial> components() const;
  w_element deg_component(int degree) const;
  /// Same terms, new truncation order (terms above it are dropped).
  w_element with_order(int order) const;
  w_element conj() const;

  void add_term(const monomial_key& key, const gaussian& c);

  w_element& operator+=(const w_element& o);
  w_element& operator-=(const w_element& o);
  friend w_element operator+(w_element a, const w_element& b) { return a += b; }
  friend w_element operator-(w_element a, const w_element& b) { return a -= b; }
  friend w_element operator-(const w_element& a);
  friend w_element operator*(const gaussian& s, const w_element& a);
  /// Structural equality of the canonical term maps (orders may differ).
  friend bool operator==(const w_element& a, const w_element& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void align(const w_element& o);

  int n_ = 0;
  int order_ = 0;
  term_map terms_;
};

/// Undeformed commutative product.
w_element w_multiply(const w_element& a, const w_element& b);
w_element partial_derivative(const w_element& a, variable v);
/// sum_i p_i d/dp_i + lambda d/dlambda
w_element deg_operator(const w_element& a);
/// Substitutes numbers for q and p; lambda stays formal.
lambda_series evaluate(const w_element& a, std::span<const rational> q_point,
                       std::span<const rational> p_point);

void check_same_dimension(int a, int b, const char* what);

}  // namespace dqw

#endif  // DQW_W_ELEMENT_HPP
