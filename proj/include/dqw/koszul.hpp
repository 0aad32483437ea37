#ifndef DQW_KOSZUL_HPP
#define DQW_KOSZUL_HPP

#include <span>
#include <string>

#include "dqw/gaussian.hpp"
#include "dqw/terms.hpp"

namespace dqw {

/// Form sum omega^{i_1..i_k}(q, p) dp_{i_1} ^ .. ^ dp_{i_k} with polynomial
/// coefficients. Keys hold [p_1..p_n | q_1..q_n | index mask]; index sets
/// are stored sorted, so antisymmetry is structural.
class koszul_form {
 public:
  koszul_form() = default;
  koszul_form(int n, int degree);

  int dimension() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c p^I q^Q dp_{indices[0]} ^ ...; unsorted indices are reordered
  /// with the permutation sign, repeated indices give zero.
  void add_term(std::span<const int> p, std::span<const int> q, std::span<const int> indices,
                const gaussian& c);
  void add_raw(const monomial_key& key, const gaussian& c);

  int p_slot(int k) const { return k; }
  int q_slot(int k) const { return n_ + k; }
  int mask_slot() const { return 2 * n_; }

  koszul_form& operator+=(const koszul_form& o);
  koszul_form& operator-=(const koszul_form& o);
  friend koszul_form operator+(koszul_form a, const koszul_form& b) { return a += b; }
  friend koszul_form operator-(koszul_form a, const koszul_form& b) { return a -= b; }
  friend koszul_form operator*(const gaussian& s, const koszul_form& a);
  friend bool operator==(const koszul_form& a, const koszul_form& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string describe() const;

 private:
  void check_same(const koszul_form& o) const;

  int n_ = 0;
  int degree_ = 0;
  term_map terms_;
};

/// Exterior derivative in the p variables.
koszul_form d_p(const koszul_form& w);
/// Euler-field contraction divided by the total weight |I| + k on each
/// homogeneous piece. Rejects degree-0 input.
koszul_form poincare_homotopy(const koszul_form& w);

}  // namespace dqw

#endif  // DQW_KOSZUL_HPP
