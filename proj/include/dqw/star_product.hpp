#ifndef DQW_STAR_PRODUCT_HPP
#define DQW_STAR_PRODUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "dqw/cochain.hpp"
#include "dqw/coboundary_solver.hpp"
#include "dqw/matrix.hpp"
#include "dqw/w_element.hpp"

namespace dqw {

using rational_matrix = std::vector<std::vector<rational>>;

/// f * g = f g + sum_{r >= 1} lambda^r C_r(f, g), stored as the finite list
/// C_1..C_K of lambda- and p-free bidifferential cochains.
struct star_product_spec {
  int n = 0;
  bool hermitian = false;
  std::optional<rational_matrix> theta;
  std::vector<multi_diff_cochain> cochains;
  /// Antisymmetric biderivation {f, g}.
  multi_diff_cochain poisson;

  int order() const { return static_cast<int>(cochains.size()); }
  /// C_r, with C_0 the pointwise product and zero beyond the stored list.
  multi_diff_cochain cochain(int r) const;
  /// Throws config_error on malformed cochains.
  void check_shape() const;
};

star_product_spec make_constant_theta_star(const rational_matrix& theta, int order);
star_product_spec make_zero_star(int n, int order);
/// {x, y} = x on R^2, C_1 = (i/2){., .}, higher C_r from the classical
/// associativity equations followed by Hermitian symmetrization.
star_product_spec make_linear_poisson_2d_star(int order, const solver_config& config = {});
/// Twist exp((i lambda / 2)(X (x) Y - Y (x) X)) with X = x d_x, Y = d_y on R^2.
star_product_spec make_linear_poisson_2d_twist(int order);

/// Sum_{i+j=m} C_i(C_j(f, g), h) - C_i(f, C_j(g, h)) over i, j >= 0.
multi_diff_cochain associativity_defect(const star_product_spec& spec, int m);

/// Bilinear extension to lambda-series of p-free polynomials, truncated at
/// the smaller of the argument orders.
w_element star_apply(const star_product_spec& spec, const w_element& f, const w_element& g);
matrix_w_element star_apply(const star_product_spec& spec, const matrix_w_element& f, const matrix_w_element& g);

struct star_validation_report {
  int order = 0;
  bool associative = true;
  bool poisson_compatible = true;
  bool hermitian = true;
  bool unital = true;
  /// First lambda order at which any check fails, 0 if none.
  int first_violated_order = 0;
  std::string violation;
  std::vector<std::string> witness;
  std::string witness_value;

  bool passed() const { return associative && poisson_compatible && hermitian && unital; }
};

/// Checks the star product order by order as cochain identities up to
/// `order`; witnesses are searched among q-monomials of degree <= basis_degree
/// (default: the defect's derivative order).
star_validation_report validate_star(const star_product_spec& spec, int order, int basis_degree = -1);

/// Inclusion of p-free polynomials into the Weyl algebra; rejects p-dependent input.
w_element pi_star(const w_element& f);
/// Sets the momenta to zero.
w_element iota_star(const w_element& a);
matrix_w_element iota_star(const matrix_w_element& a);

}  // namespace dqw

#endif  // DQW_STAR_PRODUCT_HPP
