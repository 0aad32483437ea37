#ifndef DQW_TERMS_HPP
#define DQW_TERMS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dqw/gaussian.hpp"

namespace dqw {

inline constexpr int kMaxDimension = 6;
inline constexpr int kMaxArity = 4;
inline constexpr std::size_t kKeyBytes = 1 + 2 * kMaxDimension + kMaxArity * kMaxDimension;

/// Packed exponent vector. Unused trailing slots stay zero so that the
/// defaulted ordering is a canonical lexicographic order for any layout.
struct monomial_key {
  std::array<std::uint8_t, kKeyBytes> e{};

  std::uint8_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  std::uint8_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

  auto operator<=>(const monomial_key&) const = default;
};

/// Slot layout of a term key: [lambda | p_1..p_n | q_1..q_n | J_1 | ... | J_arity],
/// where J_s is the derivative multi-index applied to argument s. A Weyl
/// algebra element uses arity 0.
struct term_layout {
  int n = 0;
  int arity = 0;

  static constexpr int lambda_slot() { return 0; }
  int p(int k) const { return 1 + k; }
  int q(int k) const { return 1 + n + k; }
  int d(int slot, int k) const { return 1 + 2 * n + slot * n + k; }
  int width() const { return 1 + 2 * n + arity * n; }

  bool operator==(const term_layout&) const = default;
};

/// Throws config_error unless 1 <= n <= kMaxDimension and arity <= kMaxArity.
void check_layout(const term_layout& layout);

using term_map = std::map<monomial_key, gaussian>;

struct term {
  monomial_key key;
  gaussian coef;
};
using term_list = std::vector<term>;

namespace terms {

void add(term_map& dst, const monomial_key& key, const gaussian& c);
void add_scaled(term_map& dst, const term_map& src, const gaussian& s);
term_map scaled(const term_map& src, const gaussian& s);
term_map negated(const term_map& src);
term_map sum(const term_map& a, const term_map& b);
term_map difference(const term_map& a, const term_map& b);

int lambda_power(const monomial_key& key);
int p_degree(const term_layout& l, const monomial_key& key);
int q_degree(const term_layout& l, const monomial_key& key);
/// Homogeneity degree of the Euler-type grading: lambda power plus p-degree.
int deg(const term_layout& l, const monomial_key& key);
int derivative_order(const term_layout& l, const monomial_key& key);
int derivative_order(const term_layout& l, const monomial_key& key, int slot);

term_map truncated(const term_layout& l, const term_map& src, int max_deg);
term_map deg_component(const term_layout& l, const term_map& src, int degree);
term_map conjugated(const term_map& src);

/// Formal partial derivative in q^k. On cochains this is the Leibniz rule
/// over the coefficient and every argument slot.
term_map dq(const term_layout& l, const term_map& src, int k);
term_map dp(const term_layout& l, const term_map& src, int k);
term_list dq(const term_layout& l, const term_list& src, int k);
term_list dp(const term_layout& l, const term_list& src, int k);
/// Applies the q-multi-index read from `multi` (n entries starting at `offset`).
term_map dq_multi(const term_layout& l, const term_map& src, const monomial_key& multi, int offset);

/// Argument-disjoint pointwise product: lambda, p and q exponents add, the
/// derivative lists are concatenated (a's arguments first).
monomial_key tensor_key(const term_layout& la, const monomial_key& a, const term_layout& lb,
                        const monomial_key& b);
term_map tensor(const term_layout& la, const term_map& a, const term_layout& lb, const term_map& b,
                int max_deg);

/// Argument-disjoint Weyl-Moyal product of cochain values,
///   mu o exp((i lambda / 2) sum_k (d_{q^k} (x) d_{p_k} - d_{p_k} (x) d_{q^k})).
/// Pairs whose total degree exceeds max_deg are skipped; the product
/// preserves the degree exactly.
term_map weyl_cup(const term_layout& la, const term_map& a, const term_layout& lb, const term_map& b,
                  int max_deg);

/// Inserts the cochain `chi` (arity lc.arity) into argument `slot` of `phi`,
/// expanding the derivatives of `phi` at that slot by the Leibniz rule.
term_map substitute(const term_layout& lphi, const term_map& phi, int slot, const term_layout& lchi,
                    const term_map& chi);

/// Human-readable monomial, e.g. "(1/2 i) lambda p2 q1^2 d[1,0] d[0,1]".
std::string describe(const term_layout& l, const monomial_key& key, const gaussian& c);

}  // namespace terms
}  // namespace dqw

#endif  // DQW_TERMS_HPP
