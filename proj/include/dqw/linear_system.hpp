#ifndef DQW_LINEAR_SYSTEM_HPP
#define DQW_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <map>
#include <optional>

#include "dqw/gaussian.hpp"
#include "dqw/terms.hpp"

namespace dqw {

/// Incremental exact column elimination over Q(i). Columns are sparse
/// vectors indexed by monomial keys. Each independent column becomes a pivot
/// whose smallest key is normalized to 1; dependent columns are dropped, so
/// solutions only use the earliest independent columns.
class sparse_eliminator {
 public:
  explicit sparse_eliminator(std::size_t max_cells = 0) : max_cells_(max_cells) {}

  /// Returns true when the column is independent of those added before.
  bool add_column(int id, const term_map& column);
  /// Coefficients x with sum x[id] column[id] = target, if any.
  std::optional<std::map<int, gaussian>> solve(const term_map& target) const;

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t columns() const noexcept { return columns_; }
  std::size_t cells() const noexcept { return cells_; }

 private:
  struct pivot {
    term_map vector;
    std::map<int, gaussian> combination;
  };

  void reduce(term_map& v, std::map<int, gaussian>& combination) const;

  std::map<monomial_key, pivot> pivots_;
  std::size_t columns_ = 0;
  std::size_t cells_ = 0;
  std::size_t max_cells_;
};

/// Cap on stored solver cells: DQW_MAX_SOLVER_CELLS if set, else a default.
std::size_t default_max_solver_cells();

}  // namespace dqw

#endif  // DQW_LINEAR_SYSTEM_HPP
