#include "dqw/linear_system.hpp"

#include <cstdlib>
#include <string>

#include "dqw/error.hpp"

namespace dqw {

namespace {

void add_to(std::map<int, gaussian>& dst, const std::map<int, gaussian>& src, const gaussian& s) {
  for (const auto& [id, c] : src) {
    auto [it, inserted] = dst.try_emplace(id, c * s);
    if (!inserted) {
      it->second += c * s;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

}  // namespace

std::size_t default_max_solver_cells() {
  if (const char* env = std::getenv("DQW_MAX_SOLVER_CELLS")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw config_error(std::string("DQW_MAX_SOLVER_CELLS must be a positive integer, got '") + env + "'");
  }
  return 50'000'000;
}

void sparse_eliminator::reduce(term_map& v, std::map<int, gaussian>& combination) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const monomial_key key = it->first;
    const gaussian c = it->second;
    terms::add_scaled(v, p->second.vector, -c);
    add_to(combination, p->second.combination, -c);
    it = v.upper_bound(key);
  }
}

bool sparse_eliminator::add_column(int id, const term_map& column) {
  ++columns_;
  term_map v = column;
  std::map<int, gaussian> combination{{id, gaussian(1)}};
  reduce(v, combination);
  if (v.empty()) return false;
  const gaussian inv = gaussian(1) / v.begin()->second;
  pivot p{terms::scaled(v, inv), {}};
  add_to(p.combination, combination, inv);
  cells_ += p.vector.size() + p.combination.size();
  if (max_cells_ != 0 && cells_ > max_cells_) {
    throw solver_exhausted("linear system exceeds the cell cap of " + std::to_string(max_cells_));
  }
  const monomial_key lead = p.vector.begin()->first;
  pivots_.emplace(lead, std::move(p));
  return true;
}

std::optional<std::map<int, gaussian>> sparse_eliminator::solve(const term_map& target) const {
  term_map v = target;
  std::map<int, gaussian> combination;
  reduce(v, combination);
  if (!v.empty()) return std::nullopt;
  std::map<int, gaussian> x;
  add_to(x, combination, -1);
  return x;
}

}  // namespace dqw
