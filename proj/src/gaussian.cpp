#include "dqw/gaussian.hpp"

#include <cctype>

#include "dqw/error.hpp"

namespace dqw {

gaussian& gaussian::operator*=(const gaussian& o) {
  rational re = re_ * o.re_ - im_ * o.im_;
  rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

gaussian& gaussian::operator/=(const gaussian& o) {
  rational den = o.norm();
  if (sgn(den) == 0) throw config_error("division by zero Gaussian rational");
  rational re = (re_ * o.re_ + im_ * o.im_) / den;
  rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const rational& q) { return q.get_str(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_rational_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool digits = false, slash = false, den_digits = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || den_digits);
}

}  // namespace

rational parse_rational(std::string_view text) {
  text = trim(text);
  if (!valid_rational_text(text)) {
    throw config_error("malformed rational '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  rational q(s, 10);
  if (sgn(q.get_den()) == 0) throw config_error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const gaussian& z) {
  if (z.is_real()) return to_string(z.re());
  if (sgn(z.re()) == 0) return to_string(z.im()) + " i";
  std::string out = to_string(z.re());
  if (sgn(z.im()) > 0) out += '+';
  out += to_string(z.im());
  out += " i";
  return out;
}

gaussian parse_gaussian(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw config_error("empty Gaussian rational");
  if (s.back() != 'i') return {parse_rational(s)};
  s.remove_suffix(1);
  s = trim(s);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view{} : trim(s.substr(0, split));
  std::string_view im_text = split == std::string_view::npos ? s : trim(s.substr(split));
  rational im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = parse_rational(im_text);
  }
  rational re = re_text.empty() ? rational(0) : parse_rational(re_text);
  return {re, im};
}

rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return rational(f);
}

rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return rational(b);
}

rational falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return rational(r);
}

}  // namespace dqw
