#include <catch_amalgamated.hpp>

#include "dqw/error.hpp"
#include "dqw/star_product.hpp"
#include "dqw/weyl.hpp"
#include "dqw/wick.hpp"
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

w_element z(int n, int order, int k) { return qvar(n, order, k) + I * pvar(n, order, k); }
w_element zbar(int n, int order, int k) { return qvar(n, order, k) - I * pvar(n, order, k); }

}  // namespace

TEST_CASE("weyl_product_examples") {
  const int K = 4;
  const w_element q1 = qvar(1, K, 0);
  const w_element p1 = pvar(1, K, 0);
  const w_element lam = w_element::lambda(1, K);
  CHECK(weyl_product(q1, p1) == w_multiply(q1, p1) + (I / gaussian(2)) * lam);
  CHECK(weyl_product(p1, q1) == w_multiply(q1, p1) - (I / gaussian(2)) * lam);
  CHECK(weyl_product(q1 - I * p1, q1 + I * p1) == mono(1, K, 0, {0}, {2}) + mono(1, K, 0, {2}, {0}) - lam);
  generator g(8);
  for (int t = 0; t < 20; ++t) {
    const w_element f = g.function(2, K, 3, 3, 1);
    const w_element h = g.function(2, K, 3, 3, 1);
    CHECK(weyl_product(f, h) == w_multiply(f, h));
  }
}

TEST_CASE("weyl_product_preserves_the_grading") {
  generator g(9);
  const int K = 6;
  for (int t = 0; t < 20; ++t) {
    const w_element a = g.element(2, K, 3, 3, 1).deg_component(g.uniform(0, 2));
    const w_element b = g.element(2, K, 3, 3, 1).deg_component(g.uniform(0, 2));
    const w_element ab = weyl_product(a, b);
    const int d = (a.is_zero() ? 0 : a.max_deg()) + (b.is_zero() ? 0 : b.max_deg());
    CHECK(ab == ab.deg_component(d));
  }
}

TEST_CASE("weyl_product_properties_on_random_triples") {
  generator g(10);
  const int K = 5;
  for (int t = 0; t < 25; ++t) {
    const int n = g.uniform(1, 3);
    const w_element a = g.element(n, K, 3, 3, 1);
    const w_element b = g.element(n, K, 3, 3, 1);
    const w_element c = g.element(n, K, 3, 3, 1);
    CHECK(weyl_product(weyl_product(a, b), c) == weyl_product(a, weyl_product(b, c)));
    CHECK(deg_operator(weyl_product(a, b)) == weyl_product(deg_operator(a), b) + weyl_product(a, deg_operator(b)));
    CHECK(weyl_product(a, b).conj() == weyl_product(b.conj(), a.conj()));
    const w_element one = w_element::constant(n, K, 1);
    CHECK(weyl_product(one, a) == a);
    CHECK(weyl_product(a, one) == a);
  }
}

TEST_CASE("matrix_weyl_product_properties") {
  generator g(12);
  const int K = 4;
  for (int t = 0; t < 8; ++t) {
    matrix_w_element a(2, K, 2);
    matrix_w_element b(2, K, 2);
    matrix_w_element c(2, K, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        a.at(i, j) = g.element(2, K, 2, 2, 1);
        b.at(i, j) = g.element(2, K, 2, 2, 1);
        c.at(i, j) = g.element(2, K, 2, 2, 1);
      }
    }
    CHECK(weyl_product(weyl_product(a, b), c) == weyl_product(a, weyl_product(b, c)));
    CHECK(weyl_product(a, b).adjoint() == weyl_product(b.adjoint(), a.adjoint()));
    CHECK(weyl_product(matrix_w_element::identity(2, K, 2), a) == a);
  }
}

TEST_CASE("wick_product_examples") {
  const int K = 4;
  const w_element lam = w_element::lambda(1, K);
  const w_element zz = w_multiply(z(1, K, 0), zbar(1, K, 0));
  CHECK(wick_product(z(1, K, 0), zbar(1, K, 0)) == zz + gaussian(2) * lam);
  CHECK(wick_product(zbar(1, K, 0), z(1, K, 0)) == zz);
  const w_element wick_comm = wick_product(z(1, K, 0), zbar(1, K, 0)) - wick_product(zbar(1, K, 0), z(1, K, 0));
  const w_element weyl_comm = weyl_product(z(1, K, 0), zbar(1, K, 0)) - weyl_product(zbar(1, K, 0), z(1, K, 0));
  CHECK(wick_comm == gaussian(2) * lam);
  CHECK(weyl_comm == wick_comm);
}

TEST_CASE("wick_product_is_associative") {
  generator g(13);
  for (int t = 0; t < 20; ++t) {
    const int n = g.uniform(1, 2);
    const int K = 12;
    const w_element a = g.element(n, K, 3, 3, 1);
    const w_element b = g.element(n, K, 3, 3, 1);
    const w_element c = g.element(n, K, 3, 3, 1);
    CHECK(wick_product(wick_product(a, b), c) == wick_product(a, wick_product(b, c)));
    CHECK(wick_product(a, b).conj() == wick_product(b.conj(), a.conj()));
  }
}

TEST_CASE("fock_equivalence_examples") {
  const int K = 4;
  const w_element zz = w_multiply(z(1, K, 0), zbar(1, K, 0));
  CHECK(laplacian(zz) == w_element::constant(1, K, 1));
  for (int sigma : {1, -1}) {
    CHECK(fock_apply(zz, sigma, fock_direction::forward) == zz + gaussian(sigma) * w_element::lambda(1, K));
    CHECK(fock_apply(fock_apply(zz, sigma, fock_direction::forward), sigma, fock_direction::inverse) == zz);
  }
  CHECK(fock_apply(qvar(1, K, 0), -1, fock_direction::forward) == qvar(1, K, 0));
  const w_element lhs = fock_apply(wick_product(z(1, K, 0), zbar(1, K, 0)), -1, fock_direction::forward);
  CHECK(lhs == weyl_product(z(1, K, 0), zbar(1, K, 0)));
  const fock_result r = fock_equivalence(zz, fock_direction::forward);
  CHECK(r.sigma == -1);
  CHECK(r.value == zz - w_element::lambda(1, K));
}

TEST_CASE("fock_sign_is_unique") {
  for (int n : {1, 2}) {
    const auto checks = verify_fock_signs(n, 2);
    REQUIRE(checks.size() == 2u);
    CHECK_FALSE(checks[0].passed());
    CHECK(checks[1].passed());
    CHECK(checks[1].sigma == -1);
    CHECK(resolve_fock_sign(n, 2) == -1);
  }
}

TEST_CASE("constant_theta_generator") {
  const star_product_spec spec = make_constant_theta_star(theta12(2), 3);
  const multi_diff_cochain c1 = cterm(2, 0, {0, 0}, {0, 0}, {{1, 0}, {0, 1}}, I / gaussian(2)) -
                                cterm(2, 0, {0, 0}, {0, 0}, {{0, 1}, {1, 0}}, I / gaussian(2));
  CHECK(spec.cochain(1) == c1);
  CHECK(spec.hermitian);
  const star_product_spec zero = make_constant_theta_star(rational_matrix(2, std::vector<rational>(2)), 3);
  for (int r = 1; r <= 3; ++r) CHECK(zero.cochain(r).is_zero());
  rational_matrix bad = theta12(2);
  bad[1][0] = 1;
  CHECK_THROWS_AS(make_constant_theta_star(bad, 2), config_error);
}

TEST_CASE("star_apply_examples") {
  const int K = 4;
  const star_product_spec spec = make_constant_theta_star(theta12(2), K);
  const w_element q1 = qvar(2, K, 0);
  const w_element q2 = qvar(2, K, 1);
  CHECK(star_apply(spec, q1, q2) == w_multiply(q1, q2) + (I / gaussian(2)) * w_element::lambda(2, K));
  generator g(14);
  const w_element f = g.function(2, K, 4, 3, 2);
  const w_element one = w_element::constant(2, K, 1);
  CHECK(star_apply(spec, one, f) == f);
  CHECK(star_apply(spec, f, one) == f);
  const star_product_spec zero = make_zero_star(2, K);
  const w_element h = g.function(2, K, 4, 3, 2);
  CHECK(star_apply(zero, f, h) == w_multiply(f, h));
  CHECK_THROWS_AS(star_apply(spec, pvar(2, K, 0), q1), config_error);
}

TEST_CASE("constant_theta_star_matches_weyl_on_shifted_coordinates") {
  // f * g computed in the Weyl algebra through f(q - theta p / 2).
  const int K = 4;
  const star_product_spec spec = make_constant_theta_star(theta12(2), K);
  generator g(15);
  for (int t = 0; t < 6; ++t) {
    const w_element f = g.function(2, K, 3, 3, 1);
    const w_element h = g.function(2, K, 3, 3, 1);
    const w_element fh = star_apply(spec, f, h);
    const w_element comm = star_apply(spec, f, h) - star_apply(spec, h, f);
    const w_element bracket = w_multiply(partial_derivative(f, {variable_kind::q, 0}), partial_derivative(h, {variable_kind::q, 1})) -
                              w_multiply(partial_derivative(f, {variable_kind::q, 1}), partial_derivative(h, {variable_kind::q, 0}));
    const w_element lam = w_element::lambda(2, K);
    CHECK((comm - I * w_multiply(lam, bracket)).deg_component(1).is_zero());
    CHECK(fh.deg_component(0) == w_multiply(f, h).deg_component(0));
  }
}

TEST_CASE("validate_star_examples") {
  const star_product_spec spec = make_constant_theta_star(theta12(2), 6);
  const star_validation_report ok = validate_star(spec, 6);
  CHECK(ok.passed());
  CHECK(ok.first_violated_order == 0);

  star_product_spec perturbed = make_constant_theta_star(theta12(2), 4);
  perturbed.cochains[1] += cterm(2, 0, {0, 0}, {0, 0}, {{1, 0}, {1, 0}});
  const star_validation_report bad = validate_star(perturbed, 4);
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.associative);
  CHECK(bad.first_violated_order == 3);
  CHECK(bad.violation == "associativity");
  REQUIRE(bad.witness.size() == 3u);
  CHECK(bad.witness_value != "0");
  // The perturbation is a classical cocycle, so order 2 alone is still associative.
  CHECK(validate_star(perturbed, 2).passed());

  CHECK(validate_star(make_zero_star(3, 4), 4).passed());

  star_product_spec wrong_poisson = make_constant_theta_star(theta12(2), 2);
  wrong_poisson.poisson = gaussian(2) * wrong_poisson.poisson;
  const star_validation_report p = validate_star(wrong_poisson, 2);
  CHECK_FALSE(p.poisson_compatible);
  CHECK(p.first_violated_order == 1);

  star_product_spec not_unital = make_constant_theta_star(theta12(2), 2);
  not_unital.cochains[1] += cterm(2, 0, {0, 0}, {1, 0}, {{0, 0}, {0, 0}});
  CHECK_FALSE(validate_star(not_unital, 2).unital);

  star_product_spec not_hermitian = make_constant_theta_star(theta12(2), 2);
  not_hermitian.cochains[1] += cterm(2, 0, {0, 0}, {0, 0}, {{1, 0}, {1, 0}}, I);
  CHECK_FALSE(validate_star(not_hermitian, 2).hermitian);
}

TEST_CASE("perturbed_star_witness_reproduces_the_defect") {
  star_product_spec perturbed = make_constant_theta_star(theta12(2), 4);
  perturbed.cochains[1] += cterm(2, 0, {0, 0}, {0, 0}, {{1, 0}, {1, 0}});
  const int K = 4;
  const w_element a = qvar(2, K, 0);
  const w_element c = w_multiply(qvar(2, K, 0), qvar(2, K, 1));
  const w_element left = star_apply(perturbed, star_apply(perturbed, a, a), c);
  const w_element right = star_apply(perturbed, a, star_apply(perturbed, a, c));
  const w_element diff = left - right;
  CHECK(diff.deg_component(0).is_zero());
  CHECK(diff.deg_component(1).is_zero());
  CHECK(diff.deg_component(2).is_zero());
  CHECK(diff.deg_component(3) == mono(2, K, 3, {0, 0}, {0, 0}, -I));
}

TEST_CASE("chart_maps") {
  const int K = 3;
  const w_element a = mono(1, K, 0, {0}, {2}) + mono(1, K, 0, {2}, {0}) - w_element::lambda(1, K);
  CHECK(iota_star(a) == mono(1, K, 0, {0}, {2}) - w_element::lambda(1, K));
  const w_element f = w_multiply(qvar(2, K, 0), qvar(2, K, 1));
  CHECK(iota_star(pi_star(f)) == f);
  CHECK(weyl_product(pi_star(qvar(2, K, 0)), pi_star(qvar(2, K, 1))) == pi_star(f));
  CHECK_THROWS_AS(pi_star(pvar(1, K, 0)), config_error);
}

TEST_CASE("linear_poisson_fixture_is_a_star_product") {
  const star_product_spec spec = make_linear_poisson_2d_star(3);
  const star_validation_report report = validate_star(spec, 3);
  CHECK(report.passed());
  const star_product_spec twist = make_linear_poisson_2d_twist(3);
  CHECK(validate_star(twist, 3).passed());
  CHECK(spec.cochain(1) == twist.cochain(1));
  // Two star products agreeing at first order differ at second order by a
  // classical cocycle with vanishing antisymmetric part.
  const multi_diff_cochain diff = spec.cochain(2) - twist.cochain(2);
  CHECK(coboundary(diff, coboundary_mode::classical).is_zero());
  CHECK(alt(diff).is_zero());
}
