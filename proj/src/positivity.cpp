#include "dqw/positivity.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "dqw/error.hpp"
#include "dqw/weyl.hpp"

namespace dqw {

namespace {

bool atom_less(const atom& a, const atom& b) {
  if (a.point != b.point) return a.point < b.point;
  return std::lexicographical_compare(a.vector.begin(), a.vector.end(), b.vector.begin(), b.vector.end(),
                                      [](const gaussian& x, const gaussian& y) {
                                        if (x.re() != y.re()) return x.re() < y.re();
                                        return x.im() < y.im();
                                      });
}

lambda_series zero_series(int order) {
  lambda_series s;
  s.coefficients.assign(static_cast<std::size_t>(order + 1), gaussian(0));
  return s;
}

std::vector<rational> zero_momenta(int n) { return std::vector<rational>(static_cast<std::size_t>(n), rational(0)); }

void check_functional_shape(int n, int size, int an, int asize, const char* what) {
  check_same_dimension(n, an, what);
  if (size != asize) {
    throw config_error(std::string("matrix size mismatch in ") + what + ": " + std::to_string(size) + " vs " +
                       std::to_string(asize));
  }
}

std::vector<std::vector<int>> multi_indices(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == n - 1) {
      alpha[static_cast<std::size_t>(slot)] = remaining;
      out.push_back(alpha);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      alpha[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace

state_functional::state_functional(int n, int size, std::vector<atom> atoms)
    : n_(n), size_(size), atoms_(std::move(atoms)) {
  check_layout({n, 0});
  if (size < 1) throw config_error("matrix size must be positive");
  for (const auto& a : atoms_) {
    if (static_cast<int>(a.point.size()) != n) throw config_error("atom point has wrong dimension");
    if (static_cast<int>(a.vector.size()) != size) throw config_error("atom vector has wrong length");
  }
  std::sort(atoms_.begin(), atoms_.end(), atom_less);
}

lambda_series state_functional::apply(const matrix_w_element& a) const {
  check_functional_shape(n_, size_, a.dimension(), a.size(), "state functional");
  lambda_series out = zero_series(a.order());
  const std::vector<rational> p = zero_momenta(n_);
  for (const auto& at : atoms_) {
    for (int i = 0; i < size_; ++i) {
      const gaussian vi = at.vector[static_cast<std::size_t>(i)].conj();
      if (vi.is_zero()) continue;
      for (int j = 0; j < size_; ++j) {
        const gaussian& vj = at.vector[static_cast<std::size_t>(j)];
        if (vj.is_zero() || a.at(i, j).is_zero()) continue;
        out = out + (vi * vj) * evaluate(a.at(i, j), at.point, p);
      }
    }
  }
  return out;
}

lambda_series state_functional::apply(const w_element& a) const { return apply(matrix_w_element::scalar(a, size_)); }

state_functional make_point_functional(int n, int size, std::vector<std::vector<rational>> points,
                                       std::vector<std::vector<gaussian>> vectors) {
  if (points.size() != vectors.size()) throw config_error("points and vectors must have the same count");
  std::vector<atom> atoms;
  for (std::size_t k = 0; k < points.size(); ++k) atoms.push_back({std::move(points[k]), std::move(vectors[k])});
  return state_functional(n, size, std::move(atoms));
}

state_functional make_delta_functional(int n, int size) {
  std::vector<gaussian> v(static_cast<std::size_t>(size), gaussian(0));
  v[0] = 1;
  return make_point_functional(n, size, {zero_momenta(n)}, {v});
}

lambda_series undeformed_functional::apply(const matrix_w_element& f) const { return base_.apply(f); }

deformed_functional::deformed_functional(state_functional base, tau_map tau, int fock_basis_degree)
    : base_(std::move(base)), tau_(std::move(tau)) {
  check_same_dimension(base_.dimension(), tau_.n, "deformed functional");
  sigma_ = resolve_fock_sign(base_.dimension(), fock_basis_degree);
}

lambda_series deformed_functional::apply(const matrix_w_element& f) const {
  check_functional_shape(dimension(), size(), f.dimension(), f.size(), "deformed functional");
  const matrix_w_element image = f.map([this](const w_element& e) { return apply_tau(tau_, e); });
  return base_.apply(iota_star(fock_apply(image, sigma_, direction())));
}

glued_functional::glued_functional(std::vector<glue_part> parts, star_product_spec spec)
    : parts_(std::move(parts)), spec_(std::move(spec)) {
  n_ = parts_.front().part->dimension();
  size_ = parts_.front().part->size();
}

lambda_series glued_functional::apply(const matrix_w_element& f) const {
  check_functional_shape(n_, size_, f.dimension(), f.size(), "glued functional");
  lambda_series out = zero_series(f.order());
  for (const auto& [weight, part] : parts_) {
    const matrix_w_element chi = matrix_w_element::scalar(weight, size_);
    const matrix_w_element chibar = matrix_w_element::scalar(weight.conj(), size_);
    const lambda_series value = part->apply(star_apply(spec_, star_apply(spec_, chibar, f), chi));
    const int order = std::min(out.order(), value.order());
    out = truncate(out, order) + truncate(value, order);
  }
  return out;
}

int glued_functional::reliable_order(int order) const {
  int r = order;
  for (const auto& p : parts_) r = std::min(r, p.part->reliable_order(std::min(order, p.weight.order())));
  return r;
}

std::shared_ptr<const glued_functional> glue_functionals(std::vector<glue_part> parts, const star_product_spec& spec) {
  if (parts.empty()) throw config_error("gluing needs at least one part");
  const int n = parts.front().part->dimension();
  const int size = parts.front().part->size();
  int order = parts.front().weight.order();
  for (const auto& p : parts) {
    if (!p.part) throw config_error("gluing part without a functional");
    check_functional_shape(n, size, p.part->dimension(), p.part->size(), "gluing");
    check_same_dimension(n, p.weight.dimension(), "gluing weight");
    if (!p.weight.is_p_free()) throw config_error("gluing weights must be p-independent");
    order = std::min(order, p.weight.order());
  }
  check_same_dimension(n, spec.n, "gluing");
  w_element sum(n, order);
  for (const auto& p : parts) sum += star_apply(spec, p.weight.conj(), p.weight);
  const w_element defect = sum - w_element::constant(n, order, 1);
  if (!defect.is_zero()) {
    std::string witness;
    for (const auto& [k, c] : defect.terms()) {
      witness = terms::describe(defect.layout(), k, c);
      break;
    }
    throw config_error("weights violate the quadratic partition of unity: defect " + witness);
  }
  return std::shared_ptr<const glued_functional>(new glued_functional(std::move(parts), spec));
}

bool wick_certificate::matches() const {
  if (direct.coefficients.size() != decomposition.size()) return false;
  for (std::size_t r = 0; r < decomposition.size(); ++r) {
    if (direct.coefficients[r] != gaussian(decomposition[r])) return false;
  }
  return true;
}

bool wick_certificate::passed() const {
  return matches() && std::all_of(nonnegative.begin(), nonnegative.end(), [](bool b) { return b; });
}

wick_certificate wick_positivity_certificate(const state_functional& base, const matrix_w_element& a) {
  check_functional_shape(base.dimension(), base.size(), a.dimension(), a.size(), "Wick certificate");
  const int n = a.dimension();
  const int size = a.size();
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (!a.at(i, j).is_lambda_free()) throw config_error("Wick certificate needs a lambda-free element");
    }
  }
  wick_certificate cert;
  cert.direct = base.apply(wick_product(a.adjoint(), a));
  const int order = a.order();
  cert.decomposition.assign(static_cast<std::size_t>(order + 1), rational(0));
  const std::vector<rational> p = zero_momenta(n);
  for (int r = 0; r <= order; ++r) {
    for (const auto& alpha : multi_indices(n, r)) {
      matrix_w_element d = a;
      rational weight = 1;
      for (int k = 0; k < n; ++k) {
        const int e = alpha[static_cast<std::size_t>(k)];
        for (int t = 0; t < e; ++t) d = d.map([k](const w_element& x) { return dzbar(x, k); });
        weight *= rational(1 << e) / factorial(static_cast<unsigned>(e));
      }
      if (d.is_zero()) continue;
      for (std::size_t ai = 0; ai < base.atoms().size(); ++ai) {
        const atom& at = base.atoms()[ai];
        rational norm = 0;
        for (int i = 0; i < size; ++i) {
          gaussian w;
          for (int j = 0; j < size; ++j) {
            const gaussian& vj = at.vector[static_cast<std::size_t>(j)];
            if (vj.is_zero() || d.at(i, j).is_zero()) continue;
            w += evaluate(d.at(i, j), at.point, p).coefficients[0] * vj;
          }
          norm += w.norm();
        }
        if (sgn(norm) == 0) continue;
        const rational value = weight * norm;
        cert.decomposition[static_cast<std::size_t>(r)] += value;
        cert.terms.push_back({r, ai, alpha, value});
      }
    }
  }
  for (const auto& c : cert.decomposition) cert.nonnegative.push_back(sgn(c) >= 0);
  return cert;
}

std::string to_string(positivity_outcome o) {
  switch (o) {
    case positivity_outcome::pass:
      return "pass";
    case positivity_outcome::fail:
      return "fail";
    case positivity_outcome::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

positivity_verdict check_positivity(const functional& omega, const star_product_spec& spec,
                                    const std::vector<matrix_w_element>& tests) {
  check_same_dimension(omega.dimension(), spec.n, "check_positivity");
  positivity_verdict verdict;
  verdict.functional_kind = omega.kind();
  verdict.entries.resize(tests.size());
  int reliable = -1;
  for (const auto& t : tests) {
    const int r = omega.reliable_order(t.order());
    reliable = reliable < 0 ? r : std::min(reliable, r);
  }
  verdict.reliable_order = std::max(reliable, 0);

  auto evaluate_one = [&](std::size_t i) {
    const matrix_w_element& f = tests[i];
    const lambda_series value =
        truncate(omega.apply(star_apply(spec, f.adjoint(), f)), omega.reliable_order(f.order()));
    const auto real = real_part_if_real(value);
    if (!real) {
      std::string coeffs;
      for (const auto& c : value.coefficients) coeffs += (coeffs.empty() ? "" : ", ") + to_string(c);
      throw consistency_error("omega(f* * f) is not real for test " + std::to_string(i) + ": (" + coeffs + ")");
    }
    verdict.entries[i] = {*real, series_sign(*real)};
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), std::max<std::size_t>(1, tests.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tests.size(); ++i) evaluate_one(i);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < tests.size(); i += workers) evaluate_one(i);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  for (std::size_t i = 0; i < verdict.entries.size(); ++i) {
    if (verdict.entries[i].verdict == sign_verdict::negative) verdict.negative.push_back(i);
    if (verdict.entries[i].verdict == sign_verdict::zero_up_to_K) verdict.inconclusive.push_back(i);
  }
  if (!verdict.negative.empty()) {
    verdict.outcome = positivity_outcome::fail;
  } else if (!tests.empty() && verdict.inconclusive.size() == tests.size()) {
    verdict.outcome = positivity_outcome::inconclusive;
  } else {
    verdict.outcome = positivity_outcome::pass;
  }
  return verdict;
}

}  // namespace dqw
