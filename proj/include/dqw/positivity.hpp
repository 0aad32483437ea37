#ifndef DQW_POSITIVITY_HPP
#define DQW_POSITIVITY_HPP

#include <memory>
#include <string>
#include <vector>

#include "dqw/lambda_series.hpp"
#include "dqw/matrix.hpp"
#include "dqw/star_product.hpp"
#include "dqw/tau.hpp"
#include "dqw/wick.hpp"

namespace dqw {

struct atom {
  std::vector<rational> point;
  std::vector<gaussian> vector;

  bool operator==(const atom&) const = default;
};

/// Finite atomic functional A -> sum_a v_a^* A(x_a) v_a on N x N matrices.
/// Elements with momenta are evaluated at p = 0, so apply() is the
/// composite with iota*.
class state_functional {
 public:
  state_functional() = default;
  state_functional(int n, int size, std::vector<atom> atoms);

  int dimension() const noexcept { return n_; }
  int size() const noexcept { return size_; }
  const std::vector<atom>& atoms() const noexcept { return atoms_; }

  lambda_series apply(const matrix_w_element& a) const;
  /// Scalar elements act as multiples of the identity matrix.
  lambda_series apply(const w_element& a) const;

  bool operator==(const state_functional&) const = default;

 private:
  int n_ = 0;
  int size_ = 1;
  std::vector<atom> atoms_;
};

/// Sorts the atoms into canonical order; throws config_error on shape mismatch.
state_functional make_point_functional(int n, int size, std::vector<std::vector<rational>> points,
                                       std::vector<std::vector<gaussian>> vectors);
/// One atom at the origin with v = e_1.
state_functional make_delta_functional(int n, int size = 1);

/// Linear map from matrices of p-free lambda-series to C[[lambda]].
class functional {
 public:
  virtual ~functional() = default;
  virtual int dimension() const = 0;
  virtual int size() const = 0;
  virtual lambda_series apply(const matrix_w_element& f) const = 0;
  /// Highest lambda order of apply() that is exact for arguments truncated at `order`.
  virtual int reliable_order(int order) const = 0;
  virtual std::string kind() const = 0;
};

/// The lambda-linear extension of a classical functional.
class undeformed_functional final : public functional {
 public:
  explicit undeformed_functional(state_functional base) : base_(std::move(base)) {}

  int dimension() const override { return base_.dimension(); }
  int size() const override { return base_.size(); }
  lambda_series apply(const matrix_w_element& f) const override;
  int reliable_order(int order) const override { return order; }
  std::string kind() const override { return "undeformed"; }

 private:
  state_functional base_;
};

/// f -> Omega_0(iota*(S^{-1}(tau(f)))) where S^{-1} maps the Weyl product to
/// the Wick product. Terms dropped by the deg truncation of tau can reach
/// lambda^{(K+1)/2} after S^{-1}, so only orders <= K/2 are exact.
class deformed_functional final : public functional {
 public:
  deformed_functional(state_functional base, tau_map tau, int fock_basis_degree = 2);

  int dimension() const override { return base_.dimension(); }
  int size() const override { return base_.size(); }
  lambda_series apply(const matrix_w_element& f) const override;
  int reliable_order(int order) const override { return std::min(order, tau_.order) / 2; }
  std::string kind() const override { return "deformed"; }

  int sigma() const noexcept { return sigma_; }
  fock_direction direction() const noexcept { return fock_direction::inverse; }
  const tau_map& tau() const noexcept { return tau_; }
  const state_functional& base() const noexcept { return base_; }

 private:
  state_functional base_;
  tau_map tau_;
  int sigma_ = 0;
};

struct glue_part {
  /// p-free lambda-series chi_a
  w_element weight;
  std::shared_ptr<const functional> part;
};

/// f -> sum_a Omega_a(conj(chi_a) * f * chi_a).
class glued_functional final : public functional {
 public:
  int dimension() const override { return n_; }
  int size() const override { return size_; }
  lambda_series apply(const matrix_w_element& f) const override;
  int reliable_order(int order) const override;
  std::string kind() const override { return "glued"; }

 private:
  friend std::shared_ptr<const glued_functional> glue_functionals(std::vector<glue_part> parts,
                                                                  const star_product_spec& spec);
  glued_functional(std::vector<glue_part> parts, star_product_spec spec);

  int n_ = 0;
  int size_ = 1;
  std::vector<glue_part> parts_;
  star_product_spec spec_;
};

/// Throws config_error unless sum_a conj(chi_a) * chi_a = 1 holds exactly
/// through the weights' truncation order.
std::shared_ptr<const glued_functional> glue_functionals(std::vector<glue_part> parts,
                                                         const star_product_spec& spec);

struct wick_square_term {
  int lambda_power = 0;
  std::size_t atom = 0;
  std::vector<int> alpha;
  /// 2^|alpha| / alpha! times |(d_zbar^alpha A)(x) v|^2
  rational value;
};

struct wick_certificate {
  /// Omega_0(A^* *_Wick A) computed directly.
  lambda_series direct;
  /// The same coefficients assembled from the squared moduli.
  std::vector<rational> decomposition;
  std::vector<bool> nonnegative;
  std::vector<wick_square_term> terms;

  bool matches() const;
  bool passed() const;
};

/// Requires a lambda-free A: the coefficient of lambda^r is then
/// sum_{|alpha|=r} 2^r / alpha! sum_a |(d_zbar^alpha A)(x_a) v_a|^2.
wick_certificate wick_positivity_certificate(const state_functional& base, const matrix_w_element& a);

enum class positivity_outcome { pass, fail, inconclusive };

struct positivity_entry {
  real_lambda_series value;
  sign_verdict verdict = sign_verdict::zero_up_to_K;
};

struct positivity_verdict {
  std::string functional_kind;
  int reliable_order = 0;
  std::vector<positivity_entry> entries;
  std::vector<std::size_t> negative;
  std::vector<std::size_t> inconclusive;
  /// fail if any entry is negative, inconclusive if every entry is, pass otherwise.
  positivity_outcome outcome = positivity_outcome::pass;
};

std::string to_string(positivity_outcome o);

/// Evaluates omega(f^* * f) for every test element. A nonzero imaginary part
/// throws consistency_error.
positivity_verdict check_positivity(const functional& omega, const star_product_spec& spec,
                                    const std::vector<matrix_w_element>& tests);

}  // namespace dqw

#endif  // DQW_POSITIVITY_HPP
