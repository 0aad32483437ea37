#ifndef DQW_WEYL_HPP
#define DQW_WEYL_HPP

#include "dqw/matrix.hpp"
#include "dqw/w_element.hpp"

namespace dqw {

/// mu o exp((i lambda / 2) sum_k (d_{q^k} (x) d_{p_k} - d_{p_k} (x) d_{q^k})),
/// truncated at the smaller of the two orders.
w_element weyl_product(const w_element& a, const w_element& b);
matrix_w_element weyl_product(const matrix_w_element& a, const matrix_w_element& b);

/// Canonical bracket sum_k (d_{q^k} a d_{p_k} b - d_{p_k} a d_{q^k} b).
w_element canonical_bracket(const w_element& a, const w_element& b);

}  // namespace dqw

#endif  // DQW_WEYL_HPP
