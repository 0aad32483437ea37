#include "dqw/json_io.hpp"

#include "dqw/error.hpp"

namespace dqw {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw config_error(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw config_error(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw config_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

int optional_int(const json& j, const char* key, int fallback) {
  return j.contains(key) ? int_field(j, key) : fallback;
}

bool optional_bool(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) throw config_error(std::string("field \"") + key + "\" must be a boolean");
  return j[key].get<bool>();
}

gaussian gaussian_from(const json& j) {
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  if (j.is_number_integer()) return gaussian(j.get<long>());
  throw config_error("coefficient must be a string such as \"3/4+1/2 i\" or an integer");
}

rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return rational(j.get<long>());
  throw config_error("rational must be a string such as \"-3/4\" or an integer");
}

std::vector<int> exponent_list(const json& j, const char* key, int n) {
  if (!j.contains(key)) return std::vector<int>(static_cast<std::size_t>(n), 0);
  const json& v = j[key];
  if (!v.is_array() || static_cast<int>(v.size()) != n) {
    throw config_error(std::string("field \"") + key + "\" must be an array of " + std::to_string(n) + " integers");
  }
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw config_error(std::string("field \"") + key + "\" must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

json exponents_json(const monomial_key& key, int offset, int n) {
  json out = json::array();
  for (int k = 0; k < n; ++k) out.push_back(static_cast<int>(key[offset + k]));
  return out;
}

json cochain_terms(const multi_diff_cochain& phi) {
  const term_layout l = phi.layout();
  json out = json::array();
  for (const auto& [k, c] : phi.terms()) {
    json d = json::array();
    for (int s = 0; s < l.arity; ++s) d.push_back(exponents_json(k, l.d(s, 0), l.n));
    out.push_back({{"c", to_json(c)}, {"lambda", static_cast<int>(k[0])}, {"p", exponents_json(k, l.p(0), l.n)},
                   {"q", exponents_json(k, l.q(0), l.n)}, {"d", d}});
  }
  return out;
}

}  // namespace

json to_json(const rational& q) { return to_string(q); }
json to_json(const gaussian& z) { return to_string(z); }

json to_json(const lambda_series& s) {
  json out = json::array();
  for (const auto& c : s.coefficients) out.push_back(to_json(c));
  return out;
}

json to_json(const real_lambda_series& s) {
  json out = json::array();
  for (const auto& c : s.coefficients) out.push_back(to_json(c));
  return out;
}

json terms_to_json(const w_element& a) {
  const term_layout l = a.layout();
  json out = json::array();
  for (const auto& [k, c] : a.terms()) {
    out.push_back({{"c", to_json(c)}, {"lambda", static_cast<int>(k[0])}, {"p", exponents_json(k, l.p(0), l.n)},
                   {"q", exponents_json(k, l.q(0), l.n)}});
  }
  return out;
}

w_element w_element_from_terms(const json& terms, int n, int order) {
  if (!terms.is_array()) throw config_error("a polynomial must be an array of terms");
  w_element out(n, order);
  for (const auto& t : terms) {
    const int a = optional_int(t, "lambda", 0);
    out += w_element::monomial(n, order, a, exponent_list(t, "p", n), exponent_list(t, "q", n), gaussian_from(field(t, "c")));
  }
  return out;
}

json to_json(const w_element& a) {
  return {{"dimension", a.dimension()}, {"order", a.order()}, {"terms", terms_to_json(a)}};
}

w_element w_element_from_json(const json& j) {
  return w_element_from_terms(field(j, "terms"), int_field(j, "dimension"), int_field(j, "order"));
}

json to_json(const matrix_w_element& a) {
  json rows = json::array();
  for (int i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.size(); ++j) row.push_back(terms_to_json(a.at(i, j)));
    rows.push_back(row);
  }
  return {{"dimension", a.dimension()}, {"order", a.order()}, {"size", a.size()}, {"entries", rows}};
}

matrix_w_element matrix_from_json(const json& j) {
  const int n = int_field(j, "dimension");
  const int order = int_field(j, "order");
  const int size = int_field(j, "size");
  const json& rows = field(j, "entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != size) throw config_error("matrix must have `size` rows");
  matrix_w_element out(n, order, size);
  for (int i = 0; i < size; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != size) throw config_error("matrix rows must have `size` entries");
    for (int k = 0; k < size; ++k) out.at(i, k) = w_element_from_terms(row[static_cast<std::size_t>(k)], n, order);
  }
  return out;
}

json to_json(const multi_diff_cochain& phi) {
  return {{"dimension", phi.dimension()}, {"arity", phi.arity()}, {"terms", cochain_terms(phi)}};
}

multi_diff_cochain cochain_from_json(const json& j) {
  const int n = int_field(j, "dimension");
  const int arity = int_field(j, "arity");
  multi_diff_cochain out(n, arity);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw config_error("cochain terms must be an array");
  for (const auto& t : terms) {
    std::vector<std::vector<int>> derivs;
    if (t.contains("d")) {
      const json& d = t["d"];
      if (!d.is_array() || static_cast<int>(d.size()) != arity) throw config_error("\"d\" needs one multi-index per argument");
      for (const auto& e : d) derivs.push_back(exponent_list(json{{"e", e}}, "e", n));
    } else {
      derivs.assign(static_cast<std::size_t>(arity), std::vector<int>(static_cast<std::size_t>(n), 0));
    }
    out.add_term(optional_int(t, "lambda", 0), exponent_list(t, "p", n), exponent_list(t, "q", n), derivs,
                 gaussian_from(field(t, "c")));
  }
  return out;
}

json to_json(const rational_matrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    out.push_back(r);
  }
  return out;
}

rational_matrix rational_matrix_from_json(const json& j) {
  if (!j.is_array()) throw config_error("matrix must be an array of rows");
  rational_matrix out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) throw config_error("matrix must be square");
    std::vector<rational> r;
    for (const auto& v : row) r.push_back(rational_from(v));
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const star_product_spec& spec) {
  json cochains = json::array();
  for (const auto& c : spec.cochains) cochains.push_back(to_json(c));
  json out = {{"dimension", spec.n}, {"hermitian", spec.hermitian}, {"cochains", cochains}, {"poisson", to_json(spec.poisson)}};
  if (spec.theta) out["theta"] = to_json(*spec.theta);
  return out;
}

star_product_spec star_product_from_json(const json& j) {
  star_product_spec spec;
  spec.n = int_field(j, "dimension");
  spec.hermitian = optional_bool(j, "hermitian", false);
  if (j.contains("theta")) spec.theta = rational_matrix_from_json(j["theta"]);
  const json& cochains = field(j, "cochains");
  if (!cochains.is_array()) throw config_error("\"cochains\" must be an array");
  for (const auto& c : cochains) spec.cochains.push_back(cochain_from_json(c));
  spec.poisson = cochain_from_json(field(j, "poisson"));
  spec.check_shape();
  return spec;
}

json to_json(const star_validation_report& r) {
  return {{"order", r.order},
          {"associative", r.associative},
          {"poisson_compatible", r.poisson_compatible},
          {"hermitian", r.hermitian},
          {"unital", r.unital},
          {"first_violated_order", r.first_violated_order},
          {"violation", r.violation},
          {"witness", r.witness},
          {"witness_value", r.witness_value},
          {"passed", r.passed()}};
}

json to_json(const solver_report& r) {
  json attempts = json::array();
  for (const auto& a : r.attempts) {
    attempts.push_back({{"class", a.grading_class},
                        {"slack", a.slack},
                        {"max_derivative_order", a.max_derivative_order},
                        {"max_q_degree", a.max_q_degree},
                        {"columns", a.columns},
                        {"rows", a.rows},
                        {"rank", a.rank},
                        {"feasible", a.feasible}});
  }
  return {{"attempts", attempts},
          {"classes", r.classes},
          {"max_slack_used", r.max_slack_used},
          {"lambda_stripping", r.lambda_stripping}};
}

json to_json(const build_report& r) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    stages.push_back({{"k", s.k},
                      {"error_before", to_json(s.error_before)},
                      {"rk", to_json(s.rk)},
                      {"rk_cocycle", s.rk_cocycle},
                      {"rk_classical_symmetric", s.rk_classical_symmetric},
                      {"solver", to_json(s.solver)},
                      {"hermitian_adjusted", s.hermitian_adjusted},
                      {"hermitian_adjustment", to_json(s.hermitian_adjustment)}});
  }
  return {{"stage_sign", r.stage_sign}, {"stages", stages}};
}

json to_json(const tau_map& tau) {
  json components = json::array();
  for (const auto& c : tau.components) components.push_back(to_json(c));
  return {{"dimension", tau.n}, {"order", tau.order}, {"hermitian", tau.hermitian}, {"components", components}};
}

tau_map tau_map_from_json(const json& j) {
  tau_map tau;
  tau.n = int_field(j, "dimension");
  tau.order = int_field(j, "order");
  tau.hermitian = optional_bool(j, "hermitian", false);
  const json& components = field(j, "components");
  if (!components.is_array() || static_cast<int>(components.size()) != tau.order + 1) {
    throw config_error("tau needs order + 1 components");
  }
  for (const auto& c : components) {
    multi_diff_cochain phi = cochain_from_json(c);
    if (phi.dimension() != tau.n || phi.arity() != 1) throw config_error("tau components must be unary cochains");
    tau.components.push_back(std::move(phi));
  }
  return tau;
}

json to_json(const poisson_realization_report& r) {
  return {{"passed", r.passed},
          {"pairs_checked", r.pairs_checked},
          {"violation_p_degree", r.violation_p_degree},
          {"witness", r.witness}};
}

json to_json(const state_functional& f) {
  json atoms = json::array();
  for (const auto& a : f.atoms()) {
    json point = json::array();
    for (const auto& x : a.point) point.push_back(to_json(x));
    json vec = json::array();
    for (const auto& v : a.vector) vec.push_back(to_json(v));
    atoms.push_back({{"point", point}, {"vector", vec}});
  }
  return {{"dimension", f.dimension()}, {"matrix_size", f.size()}, {"atoms", atoms}};
}

state_functional state_functional_from_json(const json& j) {
  const int n = int_field(j, "dimension");
  const int size = optional_int(j, "matrix_size", 1);
  std::vector<std::vector<rational>> points;
  std::vector<std::vector<gaussian>> vectors;
  const json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw config_error("\"atoms\" must be an array");
  for (const auto& a : atoms) {
    std::vector<rational> point;
    for (const auto& x : field(a, "point")) point.push_back(rational_from(x));
    std::vector<gaussian> vec;
    if (a.contains("vector")) {
      for (const auto& v : a["vector"]) vec.push_back(gaussian_from(v));
    } else {
      vec.assign(static_cast<std::size_t>(size), gaussian(0));
      vec[0] = 1;
    }
    points.push_back(std::move(point));
    vectors.push_back(std::move(vec));
  }
  return make_point_functional(n, size, std::move(points), std::move(vectors));
}

json to_json(const positivity_verdict& v) {
  json tests = json::array();
  for (const auto& e : v.entries) {
    tests.push_back({{"coefficients", coefficient_strings(e.value)}, {"verdict", to_string(e.verdict)}});
  }
  return {{"functional", v.functional_kind}, {"reliable_order", v.reliable_order}, {"tests", tests},
          {"negative", v.negative},          {"inconclusive", v.inconclusive},     {"outcome", to_string(v.outcome)}};
}

}  // namespace dqw
