#ifndef DQW_LAMBDA_SERIES_HPP
#define DQW_LAMBDA_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "dqw/gaussian.hpp"

namespace dqw {

/// Truncated series c_0 + c_1 lambda + ... + c_K lambda^K over Q(i).
/// Coefficients beyond the stored ones are unknown, not zero.
struct lambda_series {
  std::vector<gaussian> coefficients;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  bool operator==(const lambda_series&) const = default;
};

lambda_series operator+(const lambda_series& a, const lambda_series& b);
lambda_series operator*(const gaussian& s, const lambda_series& a);
/// Keeps coefficients up to and including lambda^order.
lambda_series truncate(const lambda_series& s, int order);

/// Element of R[[lambda]] truncated at order K.
struct real_lambda_series {
  std::vector<rational> coefficients;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  bool operator==(const real_lambda_series&) const = default;
};

/// Real part, or nullopt when some coefficient has a nonzero imaginary part.
std::optional<real_lambda_series> real_part_if_real(const lambda_series& s);

enum class sign_verdict { positive, negative, zero_up_to_K };

/// Sign in the ordered ring R[[lambda]]: that of the first nonzero
/// coefficient. Vanishing of every tracked coefficient is reported as such;
/// positivity is undecidable at that truncation.
sign_verdict series_sign(const real_lambda_series& s);
real_lambda_series multiply(const real_lambda_series& a, const real_lambda_series& b);

std::string to_string(sign_verdict v);
/// Coefficient strings with trailing zeros removed (at least one entry).
std::vector<std::string> coefficient_strings(const real_lambda_series& s);

}  // namespace dqw

#endif  // DQW_LAMBDA_SERIES_HPP
