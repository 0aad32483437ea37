#include <catch_amalgamated.hpp>

#include "dqw/error.hpp"
#include "dqw/star_product.hpp"
#include "dqw/tau.hpp"
#include "dqw/weyl.hpp"
#include "support.hpp"

using namespace dqw;
using namespace dqw::test;

namespace {

const gaussian I = gaussian::imag_unit();

rational_matrix theta12(int n) {
  rational_matrix t(static_cast<std::size_t>(n), std::vector<rational>(static_cast<std::size_t>(n)));
  t[0][1] = 1;
  t[1][0] = -1;
  return t;
}

// Checks tau(f * g) = tau(f) * tau(g) on concrete arguments.
void check_homomorphism_on_samples(const star_product_spec& spec, const tau_map& tau, std::uint64_t seed) {
  generator g(seed);
  for (int t = 0; t < 10; ++t) {
    const w_element f = g.function(spec.n, tau.order, 3, 3, 0);
    const w_element h = g.function(spec.n, tau.order, 3, 3, 0);
    CHECK(apply_tau(tau, star_apply(spec, f, h)) == weyl_product(apply_tau(tau, f), apply_tau(tau, h)));
  }
}

}  // namespace

TEST_CASE("first_stage_target_is_lambda_c1") {
  const star_product_spec spec = make_constant_theta_star(theta12(2), 2);
  const std::vector<multi_diff_cochain> tau{multi_diff_cochain::identity(2)};
  const multi_diff_cochain r1 = compute_rk(spec, tau, 1);
  CHECK(r1 == spec.cochains[0].lambda_shifted(1));
  // lambda (i/2)(d_1 f d_2 g - d_2 f d_1 g)
  multi_diff_cochain expected = cterm(2, 1, {0, 0}, {0, 0}, {{1, 0}, {0, 1}}, I / gaussian(2));
  expected -= cterm(2, 1, {0, 0}, {0, 0}, {{0, 1}, {1, 0}}, I / gaussian(2));
  CHECK(r1 == expected);
  CHECK(coboundary(r1, coboundary_mode::deformed).is_zero());
}

TEST_CASE("first_component_for_constant_theta") {
  const star_product_spec spec = make_constant_theta_star(theta12(2), 1);
  multi_diff_cochain candidate = cterm(2, 0, {1, 0}, {0, 0}, {{0, 1}}, frac(1, 2));
  candidate -= cterm(2, 0, {0, 1}, {0, 0}, {{1, 0}}, frac(1, 2));
  CHECK(candidate == closed_form_constant_theta_tau(theta12(2), 1).components[1]);
  CHECK(involution(candidate) == candidate);
  CHECK(homomorphism_error(spec, {multi_diff_cochain::identity(2), candidate}, 1).is_zero());

  // The solver may return a different solution; the two differ by a cocycle.
  const tau_map tau = build_tau(spec, 1, true);
  REQUIRE(tau.components.size() == 2u);
  CHECK(tau.components[1].is_deg_homogeneous(1));
  CHECK(coboundary(tau.components[1] - candidate, coboundary_mode::deformed).is_zero());
  CHECK(tau.report.stage_sign != 0);
}

TEST_CASE("build_is_deterministic") {
  const star_product_spec spec = make_linear_poisson_2d_star(3);
  const tau_map a = build_tau(spec, 3, true);
  const tau_map b = build_tau(spec, 3, true);
  CHECK(a.components == b.components);
  CHECK(a.report.stage_sign == b.report.stage_sign);
}

TEST_CASE("hermitian_tau_commutes_with_conjugation") {
  const int K = 3;
  const tau_map tau = build_tau(make_linear_poisson_2d_star(K), K, true);
  generator g(17);
  for (int t = 0; t < 10; ++t) {
    const w_element f = g.function(2, K, 3, 3, 1);
    CHECK(apply_tau(tau, f.conj()) == apply_tau(tau, f).conj());
  }
}

TEST_CASE("coordinate_images_are_canonically_conjugate") {
  const int K = 2;
  const tau_map tau = closed_form_constant_theta_tau(theta12(2), K);
  const w_element a = classical_tau(tau, qvar(2, K, 0));
  const w_element b = classical_tau(tau, qvar(2, K, 1));
  CHECK(canonical_bracket(a, b) == w_element::constant(2, K, 1));
}

TEST_CASE("apply_tau_shifts_coordinates") {
  const int K = 3;
  const tau_map tau = closed_form_constant_theta_tau(theta12(2), K);
  CHECK(apply_tau(tau, qvar(2, K, 0)) == qvar(2, K, 0) - frac(1, 2) * pvar(2, K, 1));
  CHECK(apply_tau(tau, qvar(2, K, 1)) == qvar(2, K, 1) + frac(1, 2) * pvar(2, K, 0));
  CHECK(apply_tau(tau, w_element::constant(2, K, 5)) == w_element::constant(2, K, 5));
  CHECK_THROWS_AS(apply_tau(tau, pvar(2, K, 0)), config_error);
}

TEST_CASE("closed_form_is_a_homomorphism") {
  for (int n : {2, 3}) {
    rational_matrix theta = theta12(n);
    if (n == 3) {
      theta[1][2] = rational(1, 3);
      theta[2][1] = rational(-1, 3);
    }
    const star_product_spec spec = make_constant_theta_star(theta, 4);
    const tau_map tau = closed_form_constant_theta_tau(theta, 4);
    CHECK(homomorphism_defect(spec, tau).is_zero());
    check_homomorphism_on_samples(spec, tau, 40 + static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("solver_tau_for_constant_theta") {
  const int K = 4;
  const star_product_spec spec = make_constant_theta_star(theta12(2), K);
  const tau_map tau = build_tau(spec, K, true);
  REQUIRE(tau.components.size() == static_cast<std::size_t>(K + 1));
  CHECK(homomorphism_defect(spec, tau).is_zero());
  REQUIRE(tau.report.stages.size() == static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    const auto& stage = tau.report.stages[static_cast<std::size_t>(k - 1)];
    CHECK(stage.k == k);
    CHECK(stage.rk_cocycle);
    CHECK(stage.rk_classical_symmetric);
    CHECK(stage.error_before == stage.rk);
    CHECK(tau.components[static_cast<std::size_t>(k)].is_deg_homogeneous(k));
    CHECK(involution(tau.components[static_cast<std::size_t>(k)]) == tau.components[static_cast<std::size_t>(k)]);
  }
  check_homomorphism_on_samples(spec, tau, 7);
  CHECK(check_poisson_realization(tau, spec).passed);
}

TEST_CASE("zero_poisson_gives_trivial_tau") {
  const star_product_spec spec = make_zero_star(2, 3);
  const tau_map tau = build_tau(spec, 3, true);
  for (int k = 1; k <= 3; ++k) CHECK(tau.components[static_cast<std::size_t>(k)].is_zero());
  CHECK(tau.report.stage_sign == 1);
  const w_element f = w_multiply(qvar(2, 3, 0), qvar(2, 3, 1));
  CHECK(apply_tau(tau, f) == f);
}

TEST_CASE("order_zero_is_the_inclusion") {
  const star_product_spec spec = make_constant_theta_star(theta12(2), 0);
  const tau_map tau = build_tau(spec, 0, false);
  REQUIRE(tau.components.size() == 1u);
  CHECK(tau.components[0] == multi_diff_cochain::identity(2));
  CHECK(tau.report.stages.empty());
}

TEST_CASE("linear_poisson_tau") {
  const int K = 3;
  const star_product_spec spec = make_linear_poisson_2d_star(K);
  const tau_map tau = build_tau(spec, K, true);
  CHECK(homomorphism_defect(spec, tau).is_zero());
  check_homomorphism_on_samples(spec, tau, 11);
  const poisson_realization_report realization = check_poisson_realization(tau, spec);
  CHECK(realization.passed);
  CHECK(realization.pairs_checked > 0u);
  for (int k = 1; k <= K; ++k) {
    const auto& c = tau.components[static_cast<std::size_t>(k)];
    CHECK(involution(c) == c);
  }
}

TEST_CASE("classical_tau_restricts_to_identity_on_functions") {
  const int K = 3;
  const tau_map tau = build_tau(make_linear_poisson_2d_star(K), K, true);
  generator g(5);
  for (int t = 0; t < 10; ++t) {
    const w_element f = g.function(2, K, 3, 3, 0);
    CHECK(iota_star(classical_tau(tau, f)) == f);
  }
}

TEST_CASE("corrupted_tau_breaks_poisson_realization") {
  const int K = 2;
  const star_product_spec spec = make_constant_theta_star(theta12(2), K);
  tau_map tau = closed_form_constant_theta_tau(theta12(2), K);
  CHECK(check_poisson_realization(tau, spec).passed);
  tau.components[1] = gaussian(2) * tau.components[1];
  const poisson_realization_report bad = check_poisson_realization(tau, spec);
  CHECK_FALSE(bad.passed);
  CHECK(bad.violation_p_degree == 0);
  REQUIRE(bad.witness.size() == 3u);
  CHECK_FALSE(homomorphism_defect(spec, tau).is_zero());
}

TEST_CASE("non_associative_star_aborts_the_build") {
  star_product_spec perturbed = make_constant_theta_star(theta12(2), 4);
  perturbed.cochains[1] += cterm(2, 0, {0, 0}, {0, 0}, {{1, 0}, {1, 0}});
  CHECK_NOTHROW(build_tau(perturbed, 2, false));
  CHECK_THROWS_AS(build_tau(perturbed, 4, false), consistency_error);
}

TEST_CASE("order_beyond_star_product_is_rejected") {
  CHECK_THROWS_AS(build_tau(make_constant_theta_star(theta12(2), 2), 3, true), config_error);
}
