#include "dqw/matrix.hpp"

#include <algorithm>

#include "dqw/error.hpp"

namespace dqw {

matrix_w_element::matrix_w_element(int n, int order, int size) : n_(n), order_(order), size_(size) {
  if (size < 1) throw config_error("matrix size must be positive");
  entries_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), w_element(n, order));
}

matrix_w_element matrix_w_element::identity(int n, int order, int size) {
  matrix_w_element out(n, order, size);
  for (int i = 0; i < size; ++i) out.at(i, i) = w_element::constant(n, order, 1);
  return out;
}

matrix_w_element matrix_w_element::scalar(const w_element& a, int size) {
  matrix_w_element out(a.dimension(), a.order(), size);
  for (int i = 0; i < size; ++i) out.at(i, i) = a;
  return out;
}

std::size_t matrix_w_element::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) throw config_error("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j);
}

const w_element& matrix_w_element::at(int i, int j) const { return entries_[index(i, j)]; }
w_element& matrix_w_element::at(int i, int j) { return entries_[index(i, j)]; }

bool matrix_w_element::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const w_element& e) { return e.is_zero(); });
}

matrix_w_element matrix_w_element::adjoint() const {
  matrix_w_element out(n_, order_, size_);
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) out.at(i, j) = at(j, i).conj();
  }
  return out;
}

matrix_w_element matrix_w_element::with_order(int order) const {
  return map([order](const w_element& e) { return e.with_order(order); });
}

matrix_w_element matrix_w_element::map(const std::function<w_element(const w_element&)>& f) const {
  matrix_w_element out = *this;
  for (auto& e : out.entries_) e = f(e);
  if (!out.entries_.empty()) out.order_ = out.entries_.front().order();
  return out;
}

void matrix_w_element::check_same(const matrix_w_element& o) const {
  check_same_dimension(n_, o.n_, "matrix operation");
  if (size_ != o.size_) throw config_error("matrix size mismatch");
}

matrix_w_element& matrix_w_element::operator+=(const matrix_w_element& o) {
  check_same(o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  order_ = std::min(order_, o.order_);
  return *this;
}

matrix_w_element& matrix_w_element::operator-=(const matrix_w_element& o) {
  check_same(o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  order_ = std::min(order_, o.order_);
  return *this;
}

matrix_w_element operator*(const gaussian& s, const matrix_w_element& a) {
  return a.map([&s](const w_element& e) { return s * e; });
}

matrix_w_element matrix_product(const matrix_w_element& a, const matrix_w_element& b, const entry_product& mul) {
  check_same_dimension(a.dimension(), b.dimension(), "matrix product");
  if (a.size() != b.size()) throw config_error("matrix size mismatch");
  const int order = std::min(a.order(), b.order());
  matrix_w_element out(a.dimension(), order, a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      w_element sum(a.dimension(), order);
      for (int k = 0; k < a.size(); ++k) sum += mul(a.at(i, k), b.at(k, j));
      out.at(i, j) = sum;
    }
  }
  return out;
}

}  // namespace dqw
