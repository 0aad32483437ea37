#ifndef DQW_MATRIX_HPP
#define DQW_MATRIX_HPP

#include <functional>
#include <vector>

#include "dqw/w_element.hpp"

namespace dqw {

/// Square matrix with Weyl-algebra entries; the involution is the
/// entrywise-conjugated transpose.
class matrix_w_element {
 public:
  matrix_w_element() = default;
  matrix_w_element(int n, int order, int size);

  static matrix_w_element identity(int n, int order, int size);
  static matrix_w_element scalar(const w_element& a, int size = 1);

  int dimension() const noexcept { return n_; }
  int order() const noexcept { return order_; }
  int size() const noexcept { return size_; }

  const w_element& at(int i, int j) const;
  w_element& at(int i, int j);

  bool is_zero() const;
  matrix_w_element adjoint() const;
  matrix_w_element with_order(int order) const;
  /// Applies f to every entry.
  matrix_w_element map(const std::function<w_element(const w_element&)>& f) const;

  matrix_w_element& operator+=(const matrix_w_element& o);
  matrix_w_element& operator-=(const matrix_w_element& o);
  friend matrix_w_element operator+(matrix_w_element a, const matrix_w_element& b) { return a += b; }
  friend matrix_w_element operator-(matrix_w_element a, const matrix_w_element& b) { return a -= b; }
  friend matrix_w_element operator*(const gaussian& s, const matrix_w_element& a);
  friend bool operator==(const matrix_w_element& a, const matrix_w_element& b) {
    return a.n_ == b.n_ && a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  void check_same(const matrix_w_element& o) const;
  std::size_t index(int i, int j) const;

  int n_ = 0;
  int order_ = 0;
  int size_ = 0;
  std::vector<w_element> entries_;
};

using entry_product = std::function<w_element(const w_element&, const w_element&)>;

/// (a b)_{ij} = sum_k a_{ik} * b_{kj} for the given entry product.
matrix_w_element matrix_product(const matrix_w_element& a, const matrix_w_element& b, const entry_product& mul);

}  // namespace dqw

#endif  // DQW_MATRIX_HPP
