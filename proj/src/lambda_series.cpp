#include "dqw/lambda_series.hpp"

#include <algorithm>

namespace dqw {

lambda_series operator+(const lambda_series& a, const lambda_series& b) {
  const std::size_t len = std::min(a.coefficients.size(), b.coefficients.size());
  lambda_series out;
  out.coefficients.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.coefficients.push_back(a.coefficients[i] + b.coefficients[i]);
  return out;
}

lambda_series operator*(const gaussian& s, const lambda_series& a) {
  lambda_series out = a;
  for (auto& c : out.coefficients) c *= s;
  return out;
}

lambda_series truncate(const lambda_series& s, int order) {
  lambda_series out = s;
  if (order + 1 < static_cast<int>(out.coefficients.size())) {
    out.coefficients.resize(static_cast<std::size_t>(std::max(order + 1, 0)));
  }
  return out;
}

std::optional<real_lambda_series> real_part_if_real(const lambda_series& s) {
  real_lambda_series out;
  out.coefficients.reserve(s.coefficients.size());
  for (const auto& c : s.coefficients) {
    if (!c.is_real()) return std::nullopt;
    out.coefficients.push_back(c.re());
  }
  return out;
}

sign_verdict series_sign(const real_lambda_series& s) {
  for (const auto& c : s.coefficients) {
    if (sgn(c) > 0) return sign_verdict::positive;
    if (sgn(c) < 0) return sign_verdict::negative;
  }
  return sign_verdict::zero_up_to_K;
}

real_lambda_series multiply(const real_lambda_series& a, const real_lambda_series& b) {
  const std::size_t len = std::min(a.coefficients.size(), b.coefficients.size());
  real_lambda_series out;
  out.coefficients.assign(len, rational(0));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; i + j < len; ++j) out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  }
  return out;
}

std::string to_string(sign_verdict v) {
  switch (v) {
    case sign_verdict::positive:
      return "positive";
    case sign_verdict::negative:
      return "negative";
    case sign_verdict::zero_up_to_K:
      return "zero_up_to_K";
  }
  return "unknown";
}

std::vector<std::string> coefficient_strings(const real_lambda_series& s) {
  std::size_t len = s.coefficients.size();
  while (len > 1 && sgn(s.coefficients[len - 1]) == 0) --len;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(to_string(s.coefficients[i]));
  if (out.empty()) out.emplace_back("0");
  return out;
}

}  // namespace dqw
