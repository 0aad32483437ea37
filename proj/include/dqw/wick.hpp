#ifndef DQW_WICK_HPP
#define DQW_WICK_HPP

#include <string>
#include <vector>

#include "dqw/matrix.hpp"
#include "dqw/w_element.hpp"

namespace dqw {

/// d/dz^k = (d_{q^k} - i d_{p_k}) / 2 and d/dzbar^k = (d_{q^k} + i d_{p_k}) / 2.
w_element dz(const w_element& a, int k);
w_element dzbar(const w_element& a, int k);

/// sum_alpha (2 lambda)^{|alpha|} / alpha! (d_z^alpha a)(d_zbar^alpha b), truncated
/// at the smaller order.
w_element wick_product(const w_element& a, const w_element& b);
matrix_w_element wick_product(const matrix_w_element& a, const matrix_w_element& b);

/// sum_k d^2 / dz^k dzbar^k = (1/4) sum_k (d_{q^k}^2 + d_{p_k}^2).
w_element laplacian(const w_element& a);

enum class fock_direction { forward, inverse };

/// exp(sigma lambda Laplacian) (forward) or exp(-sigma lambda Laplacian) (inverse).
w_element fock_apply(const w_element& a, int sigma, fock_direction direction);
matrix_w_element fock_apply(const matrix_w_element& a, int sigma, fock_direction direction);

struct fock_sign_check {
  int sigma = 0;
  bool intertwines = false;
  bool preserves_involution = false;
  std::size_t pairs_checked = 0;
  std::string witness;

  bool passed() const { return intertwines && preserves_involution; }
};

/// Checks E(A *_Wick B) = E(A) *_Weyl E(B) and E(conj A) = conj E(A) for both
/// signs on all lambda-free monomials in (q, p) of total degree <= basis_degree.
/// Internal truncation is chosen so that no term is dropped.
std::vector<fock_sign_check> verify_fock_signs(int n, int basis_degree);

/// The unique sign passing verify_fock_signs, memoized per (n, basis_degree).
/// Throws consistency_error unless exactly one sign passes.
int resolve_fock_sign(int n, int basis_degree);

struct fock_result {
  w_element value;
  int sigma = 0;
};

/// Applies the Fock equivalence with the resolved sign.
fock_result fock_equivalence(const w_element& a, fock_direction direction, int basis_degree = 2);

}  // namespace dqw

#endif  // DQW_WICK_HPP
