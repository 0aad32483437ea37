#include <catch_amalgamated.hpp>

#include "dqw/error.hpp"
#include "dqw/positivity.hpp"
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

std::vector<gaussian> coeffs(std::initializer_list<gaussian> c) { return c; }

lambda_series series(std::initializer_list<gaussian> c) { return {coeffs(c)}; }

matrix_w_element as_matrix(const w_element& f) { return matrix_w_element::scalar(f, 1); }

state_functional random_functional(generator& g, int n, int size) {
  std::vector<std::vector<rational>> points;
  std::vector<std::vector<gaussian>> vectors;
  const int atoms = g.uniform(1, 3);
  for (int a = 0; a < atoms; ++a) {
    std::vector<rational> x;
    for (int i = 0; i < n; ++i) x.push_back(rational(g.uniform(-3, 3), g.uniform(1, 2)));
    std::vector<gaussian> v;
    for (int i = 0; i < size; ++i) v.push_back(g.small_gaussian());
    points.push_back(x);
    vectors.push_back(v);
  }
  return make_point_functional(n, size, points, vectors);
}

std::vector<matrix_w_element> random_tests(generator& g, int n, int order, int size, int count) {
  std::vector<matrix_w_element> out;
  for (int t = 0; t < count; ++t) out.push_back(g.matrix(n, order, size, 3, 3, 1, false));
  return out;
}

}  // namespace

TEST_CASE("point_functional_examples") {
  const int K = 2;
  const state_functional delta = make_delta_functional(2);
  const w_element f = qvar(2, K, 0) + w_element::constant(2, K, 3) + w_element::lambda(2, K);
  CHECK(delta.apply(f) == series({3, 1, 0}));

  const state_functional empty = make_point_functional(2, 1, {}, {});
  CHECK(empty.apply(f) == series({0, 0, 0}));

  const state_functional compression = make_point_functional(1, 2, {{rational(0)}}, {{gaussian(1), gaussian(0)}});
  matrix_w_element a(1, K, 2);
  a.at(0, 0) = w_element::constant(1, K, 7);
  a.at(0, 1) = w_element::constant(1, K, 5);
  a.at(1, 1) = w_element::constant(1, K, 2);
  CHECK(compression.apply(a) == series({7, 0, 0}));

  const state_functional two = make_point_functional(1, 1, {{rational(2)}, {rational(-1)}}, {{gaussian(1)}, {I}});
  CHECK(two.apply(qvar(1, K, 0)) == series({1, 0, 0}));
  CHECK(two.atoms()[0].point[0] == -1);
  CHECK_THROWS_AS(make_point_functional(2, 1, {{rational(0)}}, {{gaussian(1)}}), config_error);
  CHECK_THROWS_AS(delta.apply(qvar(3, K, 0)), config_error);
}

TEST_CASE("wick_certificate_examples") {
  const int K = 3;
  const state_functional delta = make_delta_functional(1);
  const w_element z = qvar(1, K, 0) + I * pvar(1, K, 0);
  const w_element zbar = qvar(1, K, 0) - I * pvar(1, K, 0);

  const wick_certificate c1 = wick_positivity_certificate(delta, as_matrix(zbar));
  CHECK(c1.direct == series({0, 2, 0, 0}));
  CHECK(c1.passed());
  REQUIRE(c1.terms.size() == 1u);
  CHECK(c1.terms[0].lambda_power == 1);

  const wick_certificate c2 = wick_positivity_certificate(delta, as_matrix(z));
  CHECK(c2.direct == series({0, 0, 0, 0}));
  CHECK(c2.passed());

  const state_functional two = make_point_functional(1, 2, {{rational(1)}}, {{gaussian(1), I}});
  const wick_certificate c3 = wick_positivity_certificate(two, matrix_w_element::identity(1, K, 2));
  CHECK(c3.direct == series({2, 0, 0, 0}));
  CHECK(c3.passed());

  CHECK_THROWS_AS(wick_positivity_certificate(delta, as_matrix(w_element::lambda(1, K))), config_error);
}

TEST_CASE("wick_certificate_property") {
  generator g(2024);
  for (int t = 0; t < 40; ++t) {
    const int n = g.uniform(1, 2);
    const int size = g.uniform(1, 2);
    const int K = 3;
    const state_functional base = random_functional(g, n, size);
    const matrix_w_element a = g.matrix(n, K, size, 3, 3, 0, true);
    const wick_certificate cert = wick_positivity_certificate(base, a);
    CHECK(cert.matches());
    CHECK(cert.passed());
  }
}

TEST_CASE("undeformed_delta_is_not_positive") {
  const int K = 4;
  const star_product_spec spec = make_constant_theta_star(theta12(2), K);
  const w_element f = qvar(2, K, 0) + I * qvar(2, K, 1);
  // conj(f) * f = (q1)^2 + (q2)^2 - lambda
  CHECK(star_apply(spec, f.conj(), f) ==
        w_multiply(qvar(2, K, 0), qvar(2, K, 0)) + w_multiply(qvar(2, K, 1), qvar(2, K, 1)) -
            w_element::lambda(2, K));
  const undeformed_functional omega(make_delta_functional(2));
  const positivity_verdict v = check_positivity(omega, spec, {as_matrix(f)});
  REQUIRE(v.entries.size() == 1u);
  CHECK(coefficient_strings(v.entries[0].value) == std::vector<std::string>{"0", "-1"});
  CHECK(v.entries[0].verdict == sign_verdict::negative);
  CHECK(v.outcome == positivity_outcome::fail);
  CHECK(v.negative == std::vector<std::size_t>{0});
}

TEST_CASE("deformed_delta_is_positive") {
  const int K = 4;
  const star_product_spec spec = make_constant_theta_star(theta12(2), K);
  const tau_map tau = closed_form_constant_theta_tau(theta12(2), K);
  const w_element f = qvar(2, K, 0) + I * qvar(2, K, 1);

  // Intermediate values: g = tau(f) = X + iY with [X, Y] = i lambda, so
  // conj(g) *_Weyl g = conj(g) g - lambda, and the Laplacian of conj(g) g is 5/4.
  const w_element g = apply_tau(tau, f);
  const w_element gg = w_multiply(g.conj(), g);
  CHECK(weyl_product(g.conj(), g) == gg - w_element::lambda(2, K));
  CHECK(laplacian(gg) == w_element::constant(2, K, frac(5, 4)));
  // Same number from the Wick side: g is linear, so S^{-1} g = g and the
  // value at 0 is 2 lambda sum_k d_z conj(g) d_zbar g = 2 (1/16 + 1/16) lambda.
  gaussian wick_term;
  for (int k = 0; k < 2; ++k) {
    wick_term += gaussian(2) * evaluate(w_multiply(dz(g.conj(), k), dzbar(g, k)), std::vector<rational>{0, 0},
                                        std::vector<rational>{0, 0})
                                   .coefficients[0];
  }
  CHECK(wick_term == frac(1, 4));

  const deformed_functional omega(make_delta_functional(2), tau);
  CHECK(omega.sigma() == -1);
  CHECK(omega.reliable_order(K) == 2);
  const positivity_verdict v = check_positivity(omega, spec, {as_matrix(f)});
  CHECK(coefficient_strings(v.entries[0].value) == std::vector<std::string>{"0", "1/4"});
  CHECK(v.entries[0].verdict == sign_verdict::positive);
  CHECK(v.outcome == positivity_outcome::pass);
  CHECK(v.reliable_order == 2);
  // The homomorphism route gives the same value: Omega_0(iota* S^{-1} tau(conj(f) * f)).
  CHECK(truncate(omega.apply(as_matrix(star_apply(spec, f.conj(), f))), 2) ==
        series({0, frac(1, 4), 0}));
}

TEST_CASE("deformed_functional_deforms_the_base") {
  const int K = 4;
  const tau_map tau = build_tau(make_linear_poisson_2d_star(3), 3, true);
  generator g(31);
  for (int t = 0; t < 10; ++t) {
    const int size = g.uniform(1, 2);
    const state_functional base = random_functional(g, 2, size);
    const deformed_functional omega(base, tau);
    const matrix_w_element f = g.matrix(2, K, size, 3, 3, 1, false);
    const lambda_series value = omega.apply(f);
    CHECK(value.coefficients[0] == base.apply(f).coefficients[0]);
    CHECK(omega.apply(matrix_w_element::identity(2, K, size)).coefficients[0] ==
          base.apply(matrix_w_element::identity(2, K, size)).coefficients[0]);
  }
  const deformed_functional delta(make_delta_functional(2), tau);
  CHECK(truncate(delta.apply(as_matrix(w_element::constant(2, 3, 1))), 1) == series({1, 0}));
}

TEST_CASE("zero_test_is_inconclusive") {
  const int K = 4;
  const star_product_spec spec = make_constant_theta_star(theta12(2), K);
  const undeformed_functional undeformed(make_delta_functional(2));
  const positivity_verdict v = check_positivity(undeformed, spec, {as_matrix(w_element(2, K))});
  CHECK(v.entries[0].verdict == sign_verdict::zero_up_to_K);
  CHECK(v.inconclusive == std::vector<std::size_t>{0});
  CHECK(v.outcome == positivity_outcome::inconclusive);

  const positivity_verdict mixed =
      check_positivity(undeformed, spec, {as_matrix(w_element(2, K)), as_matrix(w_element::constant(2, K, 1))});
  CHECK(mixed.outcome == positivity_outcome::pass);
  CHECK(mixed.inconclusive.size() == 1u);
}

TEST_CASE("non_hermitian_star_yields_nonreal_values") {
  const int K = 2;
  star_product_spec spec = make_constant_theta_star(theta12(2), K);
  spec.cochains[0] = (gaussian(0) - I) * spec.cochains[0];
  const undeformed_functional omega(make_delta_functional(2));
  const w_element f = qvar(2, K, 0) + I * qvar(2, K, 1);
  CHECK_THROWS_AS(check_positivity(omega, spec, {as_matrix(f)}), consistency_error);
}

TEST_CASE("deformed_functional_has_no_negative_verdicts") {
  const int K = 4;
  generator g(77);
  struct fixture {
    star_product_spec spec;
    tau_map tau;
  };
  std::vector<fixture> fixtures;
  fixtures.push_back({make_constant_theta_star(theta12(2), K), closed_form_constant_theta_tau(theta12(2), K)});
  {
    const star_product_spec spec = make_constant_theta_star(theta12(2), K);
    fixtures.push_back({spec, build_tau(spec, K, true)});
  }
  {
    const star_product_spec spec = make_linear_poisson_2d_star(3);
    fixtures.push_back({spec, build_tau(spec, 3, true)});
  }
  for (const auto& fx : fixtures) {
    for (int size : {1, 2}) {
      const deformed_functional omega(random_functional(g, 2, size), fx.tau);
      const positivity_verdict v = check_positivity(omega, fx.spec, random_tests(g, 2, fx.tau.order, size, 8));
      CHECK(v.negative.empty());
      CHECK(v.outcome != positivity_outcome::fail);
    }
  }
}

TEST_CASE("gluing_with_constant_weights") {
  const int K = 4;
  const star_product_spec spec = make_constant_theta_star(theta12(2), K);
  const tau_map tau = closed_form_constant_theta_tau(theta12(2), K);
  auto omega1 = std::make_shared<deformed_functional>(make_delta_functional(2), tau);
  auto omega2 = std::make_shared<deformed_functional>(
      make_point_functional(2, 1, {{rational(1), rational(-1, 2)}}, {{gaussian(1)}}), tau);
  const w_element three_fifths = w_element::constant(2, K, frac(3, 5));
  const w_element four_fifths = w_element::constant(2, K, frac(4, 5));

  generator g(12);
  const auto tests = random_tests(g, 2, K, 1, 6);

  const auto single = glue_functionals({{w_element::constant(2, K, 1), omega1}}, spec);
  const auto same = glue_functionals({{three_fifths, omega1}, {four_fifths, omega1}}, spec);
  const auto mixed = glue_functionals({{three_fifths, omega1}, {four_fifths, omega2}}, spec);
  for (const auto& f : tests) {
    CHECK(single->apply(f) == omega1->apply(f));
    CHECK(same->apply(f) == omega1->apply(f));
    CHECK(mixed->apply(f) == frac(9, 25) * omega1->apply(f) + frac(16, 25) * omega2->apply(f));
  }
  const positivity_verdict v = check_positivity(*mixed, spec, tests);
  CHECK(v.negative.empty());
  CHECK(mixed->reliable_order(K) == 2);

  CHECK_THROWS_AS(glue_functionals({{three_fifths, omega1}, {three_fifths, omega2}}, spec), config_error);
  CHECK_THROWS_AS(glue_functionals({}, spec), config_error);
}
