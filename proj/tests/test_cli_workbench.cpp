#include <catch_amalgamated.hpp>

#include "dqw/error.hpp"
#include "dqw/scenario.hpp"
#include "support.hpp"

using namespace dqw;
using namespace dqw::test;

namespace {

std::string scenario_path(const std::string& name) { return std::string(DQW_SCENARIO_DIR) + "/" + name + ".json"; }

run_report run_file(const std::string& name, const scenario_overrides& o = {}) {
  return run_scenario(load_scenario(scenario_path(name)), o);
}

const json& command(const run_report& r, const std::string& name) {
  for (const auto& c : r.content["commands"]) {
    if (c["command"] == name) return c;
  }
  FAIL("command " << name << " missing");
  static const json none;
  return none;
}

rational_matrix theta12(int n) {
  rational_matrix t(static_cast<std::size_t>(n), std::vector<rational>(static_cast<std::size_t>(n)));
  t[0][1] = 1;
  t[1][0] = -1;
  return t;
}

}  // namespace

TEST_CASE("fnv1a_reference_values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("json_round_trips_are_exact") {
  generator g(99);
  for (int t = 0; t < 20; ++t) {
    const w_element a = g.element(2, 4, 4, 3, 2);
    CHECK(w_element_from_json(json::parse(to_json(a).dump())) == a);
    const multi_diff_cochain c = g.cochain(2, 2, 4, 2, 2, 2, 1);
    CHECK(cochain_from_json(json::parse(to_json(c).dump())) == c);
    const matrix_w_element m = g.matrix(2, 3, 2, 2, 2, 1);
    CHECK(matrix_from_json(json::parse(to_json(m).dump())) == m);
  }
  const star_product_spec spec = make_constant_theta_star(theta12(2), 3);
  const star_product_spec back = star_product_from_json(json::parse(to_json(spec).dump()));
  CHECK(back.cochains == spec.cochains);
  CHECK(back.poisson == spec.poisson);
  CHECK(back.theta == spec.theta);
  CHECK(to_json(back) == to_json(spec));

  const tau_map tau = closed_form_constant_theta_tau(theta12(2), 3);
  CHECK(tau_map_from_json(to_json(tau)).components == tau.components);

  const state_functional f =
      make_point_functional(2, 2, {{rational(1, 3), rational(-2)}}, {{gaussian(rational(1), rational(-1, 2)), gaussian(0)}});
  CHECK(state_functional_from_json(to_json(f)) == f);
}

TEST_CASE("scenario_round_trip") {
  for (const char* name : {"moyal-r2-delta", "matrix-n2", "gluing", "perturbed-c2", "empty"}) {
    const scenario s = load_scenario(scenario_path(name));
    const json once = to_json(s);
    const json twice = to_json(parse_scenario(once));
    CHECK(once == twice);
  }
}

TEST_CASE("malformed_scenarios_are_configuration_errors") {
  try {
    parse_scenario_text("{\"dimension\": 2,\n \"order\": }");
    FAIL("expected a parse error");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scenario_text("{\"order\": 2}"), config_error);
  CHECK_THROWS_AS(parse_scenario_text("{\"dimension\": 2, \"order\": 2, \"commands\": [\"fly\"]}"), config_error);
  CHECK_THROWS_AS(parse_scenario_text("{\"dimension\": 2, \"order\": -1}"), config_error);
  CHECK_THROWS_AS(load_scenario(scenario_path("does-not-exist")), config_error);
}

TEST_CASE("shipped_scenario_exit_codes") {
  CHECK(run_file("moyal-r2-delta").exit_code == 0);
  CHECK(run_file("perturbed-c2").exit_code == 1);
  CHECK(run_file("k0").exit_code == 0);
  CHECK(run_file("empty").exit_code == 0);
  CHECK(run_file("zero-poisson").exit_code == 0);
  CHECK(run_file("gluing").exit_code == 0);
  CHECK(run_file("matrix-n2").exit_code == 0);
}

TEST_CASE("delta_scenario_report") {
  const run_report r = run_file("moyal-r2-delta");
  const json& pos = command(r, "check-pos");
  CHECK(pos["undeformed"]["tests"][0]["coefficients"] == json({"0", "-1"}));
  CHECK(pos["undeformed"]["tests"][0]["verdict"] == "negative");
  CHECK(pos["deformed"]["tests"][0]["coefficients"] == json({"0", "1/4"}));
  CHECK(pos["deformed"]["tests"][0]["verdict"] == "positive");
  CHECK(pos["deformed"]["negative"].empty());
  CHECK(command(r, "deform")["sigma"] == -1);
  CHECK(command(r, "build-tau")["homomorphism_exact"] == true);
}

TEST_CASE("perturbed_scenario_stops_at_validation") {
  const run_report r = run_file("perturbed-c2");
  REQUIRE(r.content["commands"].size() == 1u);
  const json& v = command(r, "validate");
  CHECK(v["outcome"] == "fail");
  CHECK(v["validation"]["violation"] == "associativity");
  CHECK(v["validation"]["witness"].size() == 3u);
  CHECK(r.content["outcome"] == "fail");
}

TEST_CASE("k0_reduces_to_classical_positivity") {
  const run_report r = run_file("k0");
  const json& tau = command(r, "build-tau")["tau"];
  CHECK(tau["components"].size() == 1u);
  for (const auto& t : command(r, "check-pos")["deformed"]["tests"]) CHECK(t["verdict"] != "negative");
}

TEST_CASE("empty_scenario_report") {
  const run_report r = run_file("empty");
  CHECK(r.content["commands"].empty());
  CHECK(r.content["outcome"] == "pass");
}

TEST_CASE("overrides_and_configuration_errors_in_commands") {
  scenario_overrides o;
  o.order = 2;
  const run_report r = run_file("moyal-r2-delta", o);
  CHECK(r.content["order"] == 2);
  CHECK(command(r, "check-pos")["deformed"]["reliable_order"] == 1);

  scenario s = load_scenario(scenario_path("linear-poisson-2d"));
  s.tau_method = "closed_form";
  const run_report bad = run_scenario(s);
  CHECK(bad.exit_code == 2);
  CHECK(command(bad, "build-tau")["outcome"] == "error");
}

TEST_CASE("inconclusive_only_outcome_exits_3") {
  const scenario s = parse_scenario_text(R"({
    "dimension": 1, "order": 2,
    "star_product": {"generator": "constant_theta", "theta": [["0"]]},
    "tau": {"method": "closed_form"},
    "functional": {"atoms": []},
    "tests": {"explicit": [[{"c": "1", "q": [1]}]]},
    "commands": ["check-pos"]
  })");
  const run_report r = run_scenario(s);
  CHECK(command(r, "check-pos")["outcome"] == "inconclusive");
  CHECK(r.exit_code == 3);
}

TEST_CASE("reports_are_deterministic") {
  for (const char* name : {"moyal-r2-delta", "linear-poisson-2d", "matrix-n2"}) {
    const run_report a = run_file(name);
    const run_report b = run_file(name);
    CHECK(emit_report(a, report_format::json, false) == emit_report(b, report_format::json, false));
  }
  scenario_overrides o;
  o.seed = 12345;
  CHECK(run_file("moyal-r2-delta", o).content != run_file("moyal-r2-delta").content);
}

TEST_CASE("text_report_reparses_to_json") {
  for (const char* name : {"moyal-r2-delta", "perturbed-c2", "empty", "gluing"}) {
    const run_report r = run_file(name);
    const json from_text = report_from_text(emit_report(r, report_format::text));
    const json from_json = json::parse(emit_report(r, report_format::json));
    CHECK(from_text == from_json);
  }
}

TEST_CASE("random_tests_follow_the_seed") {
  const random_test_params p{5, 3, 1, 3};
  const auto a = random_test_matrices(2, 4, 2, p, 7);
  const auto b = random_test_matrices(2, 4, 2, p, 7);
  const auto c = random_test_matrices(2, 4, 2, p, 8);
  CHECK(a == b);
  CHECK(a != c);
  REQUIRE(a.size() == 5u);
  for (const auto& m : a) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        CHECK(m.at(i, j).is_p_free());
        CHECK(m.at(i, j).max_deg() <= 1);
      }
    }
  }
}
