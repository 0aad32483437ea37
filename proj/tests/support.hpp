#ifndef DQW_TESTS_SUPPORT_HPP
#define DQW_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "dqw/cochain.hpp"
#include "dqw/gaussian.hpp"
#include "dqw/koszul.hpp"
#include "dqw/matrix.hpp"
#include "dqw/w_element.hpp"
#include "generator.hpp"

namespace dqw::test {

inline gaussian gi(long re, long im) { return {rational(re), rational(im)}; }
inline gaussian frac(long num, long den) { return gaussian(rational(num, den)); }

inline w_element mono(int n, int order, int lambda_power, std::vector<int> p, std::vector<int> q,
                      const gaussian& c = 1) {
  return w_element::monomial(n, order, lambda_power, p, q, c);
}

inline w_element qvar(int n, int order, int k) { return w_element::q_coordinate(n, order, k); }
inline w_element pvar(int n, int order, int k) { return w_element::p_coordinate(n, order, k); }

/// Single-term cochain c lambda^a p^P q^Q d^{J_1} .. d^{J_k}.
inline multi_diff_cochain cterm(int n, int a, std::vector<int> p, std::vector<int> q,
                                std::vector<std::vector<int>> derivs, const gaussian& c = 1) {
  multi_diff_cochain out(n, static_cast<int>(derivs.size()));
  out.add_term(a, p, q, derivs, c);
  return out;
}

}  // namespace dqw::test

namespace Catch {

template <>
struct StringMaker<dqw::gaussian> {
  static std::string convert(const dqw::gaussian& z) { return dqw::to_string(z); }
};

template <>
struct StringMaker<dqw::w_element> {
  static std::string convert(const dqw::w_element& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : a.terms()) out += (out.empty() ? "" : " + ") + dqw::terms::describe(a.layout(), k, c);
    return out;
  }
};

template <>
struct StringMaker<dqw::multi_diff_cochain> {
  static std::string convert(const dqw::multi_diff_cochain& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : a.terms()) out += (out.empty() ? "" : " + ") + dqw::terms::describe(a.layout(), k, c);
    return out;
  }
};

template <>
struct StringMaker<dqw::koszul_form> {
  static std::string convert(const dqw::koszul_form& a) { return a.describe(); }
};

}  // namespace Catch

#endif  // DQW_TESTS_SUPPORT_HPP
