#ifndef DQW_COCHAIN_HPP
#define DQW_COCHAIN_HPP

#include <span>
#include <vector>

#include "dqw/gaussian.hpp"
#include "dqw/terms.hpp"
#include "dqw/w_element.hpp"

namespace dqw {

/// Multidifferential Hochschild cochain with values in the Weyl algebra,
/// kept in the normal form
///   phi(f_1, .., f_k) = sum c lambda^a p^I q^Q d^{J_1} f_1 ... d^{J_k} f_k.
/// Two cochains are equal iff their normal forms coincide.
class multi_diff_cochain {
 public:
  multi_diff_cochain() = default;
  multi_diff_cochain(int n, int arity);

  /// f -> f
  static multi_diff_cochain identity(int n);
  /// (f, g) -> f g
  static multi_diff_cochain product(int n);
  static multi_diff_cochain from_terms(int n, int arity, term_map terms);

  int dimension() const noexcept { return n_; }
  int arity() const noexcept { return arity_; }
  term_layout layout() const noexcept { return {n_, arity_}; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const monomial_key& key, const gaussian& c);
  void add_term(int lambda_power, std::span<const int> p, std::span<const int> q,
                const std::vector<std::vector<int>>& derivs, const gaussian& c);

  int max_deg() const;
  int max_derivative_order() const;
  int max_q_degree() const;
  int max_lambda_power() const;
  /// True when every term has degree d (the zero cochain is homogeneous of any degree).
  bool is_deg_homogeneous(int d) const;
  bool is_p_free() const;

  multi_diff_cochain deg_component(int degree) const;
  multi_diff_cochain truncated(int max_deg) const;
  /// Multiplies by lambda^r.
  multi_diff_cochain lambda_shifted(int r) const;

  multi_diff_cochain& operator+=(const multi_diff_cochain& o);
  multi_diff_cochain& operator-=(const multi_diff_cochain& o);
  friend multi_diff_cochain operator+(multi_diff_cochain a, const multi_diff_cochain& b) { return a += b; }
  friend multi_diff_cochain operator-(multi_diff_cochain a, const multi_diff_cochain& b) { return a -= b; }
  friend multi_diff_cochain operator*(const gaussian& s, const multi_diff_cochain& a);
  friend bool operator==(const multi_diff_cochain& a, const multi_diff_cochain& b) {
    return a.n_ == b.n_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// First term rendered for diagnostics ("0" when empty).
  std::string leading_term() const;

 private:
  void check_same(const multi_diff_cochain& o) const;

  int n_ = 0;
  int arity_ = 0;
  term_map terms_;
};

enum class coboundary_mode {
  deformed,   ///< outer actions by Weyl-Moyal multiplication
  classical,  ///< outer actions by pointwise multiplication
};

inline constexpr int kNoTruncation = 1 << 20;

/// (d phi)(f_0..f_k) = f_0 * phi(f_1..f_k) + sum_i (-1)^i phi(.., f_{i-1} f_i, ..)
///                     + (-1)^{k+1} phi(f_0..f_{k-1}) * f_k
multi_diff_cochain coboundary(const multi_diff_cochain& phi, coboundary_mode mode);
/// (1/k!) sum_sigma sign(sigma) phi o sigma
multi_diff_cochain alt(const multi_diff_cochain& phi);
/// Keeps the lambda^0 terms.
multi_diff_cochain classical_limit(const multi_diff_cochain& phi);
/// phi*(f_1..f_k) = conj(phi(conj f_k, .., conj f_1))
multi_diff_cochain involution(const multi_diff_cochain& phi);
/// phi o sigma, i.e. (f_1..f_k) -> phi(f_{perm[0]}, .., f_{perm[k-1]}).
multi_diff_cochain permute_arguments(const multi_diff_cochain& phi, std::span<const int> perm);

/// Argument-disjoint Weyl-Moyal product of values: (a * b)(f.., g..) = a(f..) * b(g..).
multi_diff_cochain weyl_cup(const multi_diff_cochain& a, const multi_diff_cochain& b,
                            int max_deg = kNoTruncation);
multi_diff_cochain pointwise_cup(const multi_diff_cochain& a, const multi_diff_cochain& b,
                                 int max_deg = kNoTruncation);
/// Inserts chi into argument `slot` of phi.
multi_diff_cochain substitute(const multi_diff_cochain& phi, int slot, const multi_diff_cochain& chi);

/// Evaluates on concrete arguments; the result is truncated at `order`.
w_element evaluate(const multi_diff_cochain& phi, std::span<const w_element> args, int order);

}  // namespace dqw

#endif  // DQW_COCHAIN_HPP
