#include "dqw/weyl.hpp"

#include <algorithm>

namespace dqw {

w_element weyl_product(const w_element& a, const w_element& b) {
  check_same_dimension(a.dimension(), b.dimension(), "weyl_product");
  const int order = std::min(a.order(), b.order());
  return w_element::from_terms(a.dimension(), order,
                               terms::weyl_cup(a.layout(), a.terms(), b.layout(), b.terms(), order));
}

matrix_w_element weyl_product(const matrix_w_element& a, const matrix_w_element& b) {
  return matrix_product(a, b, [](const w_element& x, const w_element& y) { return weyl_product(x, y); });
}

w_element canonical_bracket(const w_element& a, const w_element& b) {
  check_same_dimension(a.dimension(), b.dimension(), "canonical_bracket");
  w_element out(a.dimension(), std::min(a.order(), b.order()));
  for (int k = 0; k < a.dimension(); ++k) {
    const variable q{variable_kind::q, k};
    const variable p{variable_kind::p, k};
    out += w_multiply(partial_derivative(a, q), partial_derivative(b, p));
    out -= w_multiply(partial_derivative(a, p), partial_derivative(b, q));
  }
  return out;
}

}  // namespace dqw
