#ifndef DQW_GAUSSIAN_HPP
#define DQW_GAUSSIAN_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dqw {

using rational = mpq_class;

/// Exact complex number with rational real and imaginary parts. GMP keeps
/// both parts in lowest terms with positive denominators.
class gaussian {
 public:
  gaussian() = default;
  gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  gaussian(rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  gaussian(rational re, rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static gaussian imag_unit() { return {rational(0), rational(1)}; }

  const rational& re() const noexcept { return re_; }
  const rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  gaussian conj() const { return {re_, -im_}; }
  /// |z|^2
  rational norm() const { return re_ * re_ + im_ * im_; }

  gaussian& operator+=(const gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  gaussian& operator-=(const gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  gaussian& operator*=(const gaussian& o);
  gaussian& operator/=(const gaussian& o);

  friend gaussian operator+(gaussian a, const gaussian& b) { return a += b; }
  friend gaussian operator-(gaussian a, const gaussian& b) { return a -= b; }
  friend gaussian operator*(gaussian a, const gaussian& b) { return a *= b; }
  friend gaussian operator/(gaussian a, const gaussian& b) { return a /= b; }
  friend gaussian operator-(const gaussian& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const gaussian& a, const gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  rational re_{0};
  rational im_{0};
};

std::string to_string(const rational& q);
rational parse_rational(std::string_view text);

/// Canonical text form: "3/4", "-1/2 i", "3/4+1/2 i", "3/4-1/2 i".
std::string to_string(const gaussian& z);
/// Accepts the canonical form plus "i", "-i" and surrounding whitespace.
gaussian parse_gaussian(std::string_view text);

rational factorial(unsigned n);
rational binomial(unsigned n, unsigned k);
/// n (n-1) ... (n-k+1)
rational falling_factorial(unsigned n, unsigned k);

}  // namespace dqw

#endif  // DQW_GAUSSIAN_HPP
