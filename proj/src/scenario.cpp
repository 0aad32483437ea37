#include "dqw/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include "dqw/error.hpp"

namespace dqw {

namespace {

const std::vector<std::string> kAllCommands = {"validate", "build-tau", "deform", "check-pos"};

int int_value(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw config_error(std::string("scenario is missing \"") + key + "\"");
  if (!it->is_number_integer()) throw config_error(std::string("scenario field \"") + key + "\" must be an integer");
  return it->get<int>();
}

int int_value_or(const json& j, const char* key, int fallback) { return j.contains(key) ? int_value(j, key) : fallback; }

void check_object(const json& j, const char* what) {
  if (!j.is_object()) throw config_error(std::string(what) + " must be a JSON object");
}

matrix_w_element test_from_json(const json& t, int n, int order, int size) {
  if (t.is_array()) return matrix_w_element::scalar(w_element_from_terms(t, n, order), size);
  check_object(t, "test element");
  if (!t.contains("matrix")) throw config_error("test element must be a term list or {\"matrix\": rows}");
  return matrix_from_json({{"dimension", n}, {"order", order}, {"size", size}, {"entries", t["matrix"]}});
}

json functional_to_scenario_json(const state_functional& f) {
  json j = to_json(f);
  return {{"atoms", j["atoms"]}};
}

state_functional functional_from_scenario_json(const json& j, int n, int size) {
  check_object(j, "functional");
  json full = j;
  if (full.contains("dimension") && full["dimension"] != n) throw config_error("functional dimension differs from the scenario");
  if (full.contains("matrix_size") && full["matrix_size"] != size) {
    throw config_error("functional matrix size differs from the scenario");
  }
  full["dimension"] = n;
  full["matrix_size"] = size;
  return state_functional_from_json(full);
}

class seeded_generator {
 public:
  explicit seeded_generator(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  gaussian coefficient() {
    for (;;) {
      const rational re(uniform(-3, 3), uniform(1, 3));
      const rational im(uniform(-3, 3), uniform(1, 3));
      gaussian z(re, im);
      if (!z.is_zero()) return z;
    }
  }

 private:
  std::mt19937_64 engine_;
};

star_product_spec build_star(const scenario& s) {
  const json& d = s.star_product;
  check_object(d, "star_product");
  const std::string generator = d.value("generator", std::string("explicit"));
  star_product_spec spec;
  if (generator == "constant_theta") {
    if (!d.contains("theta")) throw config_error("constant_theta needs \"theta\"");
    spec = make_constant_theta_star(rational_matrix_from_json(d["theta"]), s.order);
  } else if (generator == "zero") {
    spec = make_zero_star(s.n, s.order);
  } else if (generator == "linear_poisson_2d") {
    if (s.n != 2) throw config_error("linear_poisson_2d needs dimension 2");
    spec = make_linear_poisson_2d_star(s.order);
  } else if (generator == "explicit") {
    if (!d.contains("spec")) throw config_error("explicit star product needs \"spec\"");
    spec = star_product_from_json(d["spec"]);
    if (spec.order() < s.order) throw config_error("explicit star product lists fewer cochains than the order");
    spec.cochains.resize(static_cast<std::size_t>(s.order));
  } else {
    throw config_error("unknown star product generator \"" + generator + "\"");
  }
  if (spec.n != s.n) throw config_error("star product dimension differs from the scenario");
  if (d.contains("perturbations")) {
    for (const auto& p : d["perturbations"]) {
      const int r = int_value(p, "order");
      if (r < 1) throw config_error("perturbation order must be >= 1");
      if (!p.contains("cochain")) throw config_error("perturbation needs \"cochain\"");
      if (r > s.order) continue;
      spec.cochains[static_cast<std::size_t>(r - 1)] += cochain_from_json(p["cochain"]);
    }
  }
  spec.check_shape();
  return spec;
}

struct run_context {
  scenario s;
  std::optional<star_product_spec> spec;
  std::optional<tau_map> tau;
  std::shared_ptr<const deformed_functional> deformed;
  std::shared_ptr<const glued_functional> glued;
  std::vector<matrix_w_element> tests;
};

enum class outcome { pass, fail, inconclusive, error };

std::string outcome_name(outcome o) {
  switch (o) {
    case outcome::pass:
      return "pass";
    case outcome::fail:
      return "fail";
    case outcome::inconclusive:
      return "inconclusive";
    case outcome::error:
      return "error";
  }
  return "error";
}

outcome from_positivity(positivity_outcome o) {
  switch (o) {
    case positivity_outcome::pass:
      return outcome::pass;
    case positivity_outcome::fail:
      return outcome::fail;
    case positivity_outcome::inconclusive:
      return outcome::inconclusive;
  }
  return outcome::error;
}

outcome combine(outcome a, outcome b) {
  auto rank = [](outcome o) {
    switch (o) {
      case outcome::error:
        return 3;
      case outcome::fail:
        return 2;
      case outcome::inconclusive:
        return 1;
      case outcome::pass:
        return 0;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

const star_product_spec& ensure_spec(run_context& ctx) {
  if (!ctx.spec) ctx.spec = build_star(ctx.s);
  return *ctx.spec;
}

bool components_hermitian(const tau_map& tau) {
  return std::all_of(tau.components.begin(), tau.components.end(),
                     [](const multi_diff_cochain& c) { return involution(c) == c; });
}

const tau_map& ensure_tau(run_context& ctx) {
  if (ctx.tau) return *ctx.tau;
  const star_product_spec& spec = ensure_spec(ctx);
  if (ctx.s.tau_method == "closed_form") {
    if (!spec.theta) throw config_error("closed_form tau needs a constant-theta star product");
    ctx.tau = closed_form_constant_theta_tau(*spec.theta, ctx.s.order);
  } else {
    ctx.tau = build_tau(spec, ctx.s.order, ctx.s.tau_hermitian);
  }
  return *ctx.tau;
}

void ensure_functionals(run_context& ctx) {
  if (ctx.deformed) return;
  const tau_map& tau = ensure_tau(ctx);
  ctx.deformed = std::make_shared<deformed_functional>(ctx.s.functional, tau);
  if (!ctx.s.gluing.empty()) {
    std::vector<glue_part> parts;
    for (const auto& g : ctx.s.gluing) {
      parts.push_back({w_element_from_terms(g.weight, ctx.s.n, ctx.s.order),
                       std::make_shared<deformed_functional>(g.functional, tau)});
    }
    ctx.glued = glue_functionals(std::move(parts), ensure_spec(ctx));
  }
}

json run_validate(run_context& ctx, outcome& result) {
  const star_product_spec& spec = ensure_spec(ctx);
  const star_validation_report r = validate_star(spec, ctx.s.order);
  result = r.passed() ? outcome::pass : outcome::fail;
  return {{"inputs_digest", fnv1a_hex(to_json(spec).dump())}, {"validation", to_json(r)}};
}

json run_build_tau(run_context& ctx, outcome& result) {
  const star_product_spec& spec = ensure_spec(ctx);
  const std::string digest =
      fnv1a_hex(to_json(spec).dump() + "|" + ctx.s.tau_method + "|" + std::to_string(ctx.s.order) + "|" +
                (ctx.s.tau_hermitian ? "hermitian" : "plain"));
  const tau_map& tau = ensure_tau(ctx);
  const bool exact = homomorphism_defect(spec, tau).is_zero();
  const bool hermitian = !tau.hermitian || components_hermitian(tau);
  const poisson_realization_report realization = check_poisson_realization(tau, spec);
  result = exact && hermitian && realization.passed ? outcome::pass : outcome::fail;
  json out = {{"inputs_digest", digest},
              {"method", ctx.s.tau_method},
              {"tau", to_json(tau)},
              {"homomorphism_exact", exact},
              {"hermitian_components", hermitian},
              {"poisson_realization", to_json(realization)}};
  if (ctx.s.tau_method != "closed_form") out["build_report"] = to_json(tau.report);
  return out;
}

json run_deform(run_context& ctx, outcome& result) {
  const bool implicit = !ctx.tau;
  ensure_functionals(ctx);
  const deformed_functional& omega = *ctx.deformed;
  const int K = ctx.s.order;
  const int reliable = omega.reliable_order(K);
  bool classical = true;
  json values = json::array();
  for (const auto& f : ctx.tests) {
    const lambda_series v = omega.apply(f);
    classical = classical && v.coefficients[0] == ctx.s.functional.apply(f).coefficients[0];
    values.push_back(to_json(truncate(v, reliable)));
  }
  const matrix_w_element one = matrix_w_element::identity(ctx.s.n, K, ctx.s.matrix_size);
  const bool unital = truncate(omega.apply(one), reliable) == truncate(ctx.s.functional.apply(one), reliable);
  result = classical && unital ? outcome::pass : outcome::fail;
  json out = {{"inputs_digest", fnv1a_hex(to_json(omega.tau()).dump() + "|" + to_json(ctx.s.functional).dump())},
              {"tau_built_implicitly", implicit},
              {"sigma", omega.sigma()},
              {"direction", "inverse"},
              {"reliable_order", reliable},
              {"base", to_json(ctx.s.functional)},
              {"classical_limit", classical},
              {"unital", unital},
              {"values", values}};
  if (ctx.glued) out["gluing"] = {{"parts", ctx.s.gluing.size()}, {"partition_verified", true}};
  return out;
}

json run_check_pos(run_context& ctx, outcome& result) {
  const star_product_spec& spec = ensure_spec(ctx);
  ensure_functionals(ctx);
  json tests = json::array();
  for (const auto& t : ctx.tests) tests.push_back(to_json(t));
  const undeformed_functional undeformed(ctx.s.functional);
  const positivity_verdict u = check_positivity(undeformed, spec, ctx.tests);
  const positivity_verdict d = check_positivity(*ctx.deformed, spec, ctx.tests);
  result = from_positivity(d.outcome);
  json out = {{"inputs_digest", fnv1a_hex(tests.dump() + "|" + to_json(ctx.deformed->tau()).dump() + "|" + to_json(ctx.s.functional).dump())},
              {"tests", ctx.tests.size()},
              {"undeformed", to_json(u)},
              {"deformed", to_json(d)}};
  out["undeformed"]["informational"] = true;
  if (ctx.glued) {
    const positivity_verdict g = check_positivity(*ctx.glued, spec, ctx.tests);
    result = combine(result, from_positivity(g.outcome));
    out["glued"] = to_json(g);
  }
  return out;
}

std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

void flatten(const json& j, const std::string& path, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path + "/" + escape_pointer_token(it.key()), out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), out);
  } else {
    out += path + ": " + j.dump() + "\n";
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

scenario parse_scenario(const json& j) {
  check_object(j, "scenario");
  scenario s;
  s.name = j.value("name", std::string());
  s.n = int_value(j, "dimension");
  s.order = int_value(j, "order");
  s.matrix_size = int_value_or(j, "matrix_size", 1);
  if (s.order < 0) throw config_error("order must be non-negative");
  if (s.matrix_size < 1) throw config_error("matrix_size must be positive");
  check_layout({s.n, 0});
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) throw config_error("seed must be an integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  s.star_product = j.contains("star_product") ? j["star_product"] : json{{"generator", "zero"}};
  check_object(s.star_product, "star_product");
  if (j.contains("tau")) {
    const json& t = j["tau"];
    check_object(t, "tau");
    s.tau_method = t.value("method", std::string("solver"));
    if (s.tau_method != "solver" && s.tau_method != "closed_form") {
      throw config_error("tau method must be \"solver\" or \"closed_form\"");
    }
    s.tau_hermitian = t.value("hermitian", true);
  }
  if (j.contains("functional")) {
    s.functional = functional_from_scenario_json(j["functional"], s.n, s.matrix_size);
  } else {
    s.functional = make_delta_functional(s.n, s.matrix_size);
  }
  if (j.contains("gluing")) {
    if (!j["gluing"].is_array()) throw config_error("gluing must be an array");
    for (const auto& g : j["gluing"]) {
      check_object(g, "gluing part");
      if (!g.contains("weight") || !g.contains("functional")) throw config_error("gluing parts need weight and functional");
      w_element_from_terms(g["weight"], s.n, s.order);
      s.gluing.push_back({g["weight"], functional_from_scenario_json(g["functional"], s.n, s.matrix_size)});
    }
  }
  if (j.contains("tests")) {
    const json& t = j["tests"];
    check_object(t, "tests");
    if (t.contains("explicit")) {
      for (const auto& e : t["explicit"]) s.explicit_tests.push_back(test_from_json(e, s.n, s.order, s.matrix_size));
    }
    if (t.contains("random")) {
      const json& r = t["random"];
      check_object(r, "random tests");
      s.random_tests.count = int_value_or(r, "count", 0);
      s.random_tests.max_q_degree = int_value_or(r, "max_q_degree", 3);
      s.random_tests.max_lambda = int_value_or(r, "max_lambda", 1);
      s.random_tests.terms = int_value_or(r, "terms", 3);
      if (s.random_tests.count < 0 || s.random_tests.max_q_degree < 0 || s.random_tests.max_lambda < 0 ||
          s.random_tests.terms < 1) {
        throw config_error("random test parameters out of range");
      }
    }
  }
  if (j.contains("commands")) {
    if (!j["commands"].is_array()) throw config_error("commands must be an array");
    for (const auto& c : j["commands"]) {
      if (!c.is_string()) throw config_error("commands must be strings");
      const std::string name = c.get<std::string>();
      if (std::find(kAllCommands.begin(), kAllCommands.end(), name) == kAllCommands.end()) {
        throw config_error("unknown command \"" + name + "\"");
      }
      s.commands.push_back(name);
    }
  } else {
    s.commands = kAllCommands;
  }
  return s;
}

scenario parse_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("malformed scenario JSON: ") + e.what());
  }
  try {
    return parse_scenario(j);
  } catch (const json::exception& e) {
    throw config_error(std::string("invalid scenario: ") + e.what());
  }
}

scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open scenario file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

json to_json(const scenario& s) {
  json tests_explicit = json::array();
  for (const auto& t : s.explicit_tests) tests_explicit.push_back({{"matrix", to_json(t)["entries"]}});
  json gluing = json::array();
  for (const auto& g : s.gluing) gluing.push_back({{"weight", g.weight}, {"functional", functional_to_scenario_json(g.functional)}});
  json out = {{"name", s.name},
              {"dimension", s.n},
              {"order", s.order},
              {"matrix_size", s.matrix_size},
              {"seed", s.seed},
              {"star_product", s.star_product},
              {"tau", {{"method", s.tau_method}, {"hermitian", s.tau_hermitian}}},
              {"functional", functional_to_scenario_json(s.functional)},
              {"tests",
               {{"explicit", tests_explicit},
                {"random",
                 {{"count", s.random_tests.count},
                  {"max_q_degree", s.random_tests.max_q_degree},
                  {"max_lambda", s.random_tests.max_lambda},
                  {"terms", s.random_tests.terms}}}}},
              {"commands", s.commands}};
  if (!s.gluing.empty()) out["gluing"] = gluing;
  return out;
}

std::vector<matrix_w_element> random_test_matrices(int n, int order, int size, const random_test_params& params,
                                                   std::uint64_t seed) {
  seeded_generator g(seed);
  std::vector<matrix_w_element> out;
  const std::vector<int> zero(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < params.count; ++t) {
    matrix_w_element m(n, order, size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        w_element e(n, order);
        for (int k = 0; k < params.terms; ++k) {
          std::vector<int> q = zero;
          const int total = g.uniform(0, params.max_q_degree);
          for (int u = 0; u < total; ++u) ++q[static_cast<std::size_t>(g.uniform(0, n - 1))];
          const int a = g.uniform(0, params.max_lambda);
          e += w_element::monomial(n, order, a, zero, q, g.coefficient());
        }
        m.at(i, j) = e;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

run_report run_scenario(const scenario& input, const scenario_overrides& overrides) {
  run_report report;
  run_context ctx;
  ctx.s = input;
  json commands = json::array();
  report.timings = json::array();
  outcome overall = outcome::pass;
  try {
    if (overrides.order) {
      if (*overrides.order < 0) throw config_error("order must be non-negative");
      ctx.s = parse_scenario([&] {
        json j = to_json(input);
        j["order"] = *overrides.order;
        return j;
      }());
    }
    if (overrides.seed) ctx.s.seed = *overrides.seed;
    if (overrides.commands) ctx.s.commands = *overrides.commands;
    ctx.tests = ctx.s.explicit_tests;
    const auto random = random_test_matrices(ctx.s.n, ctx.s.order, ctx.s.matrix_size, ctx.s.random_tests, ctx.s.seed);
    ctx.tests.insert(ctx.tests.end(), random.begin(), random.end());
  } catch (const config_error& e) {
    report.content = {{"scenario", input.name}, {"error", e.what()}, {"commands", commands}, {"outcome", "error"}, {"exit_code", 2}};
    report.exit_code = 2;
    return report;
  }

  for (const auto& name : ctx.s.commands) {
    const auto start = std::chrono::steady_clock::now();
    outcome result = outcome::pass;
    json entry;
    try {
      if (name == "validate") {
        entry = run_validate(ctx, result);
      } else if (name == "build-tau") {
        entry = run_build_tau(ctx, result);
      } else if (name == "deform") {
        entry = run_deform(ctx, result);
      } else if (name == "check-pos") {
        entry = run_check_pos(ctx, result);
      } else {
        throw config_error("unknown command \"" + name + "\"");
      }
    } catch (const config_error& e) {
      result = outcome::error;
      entry = {{"error", e.what()}};
    } catch (const solver_exhausted& e) {
      result = outcome::error;
      entry = {{"error", e.what()}};
    } catch (const consistency_error& e) {
      result = outcome::fail;
      entry = {{"error", e.what()}};
    } catch (const precondition_error& e) {
      result = outcome::fail;
      entry = {{"error", e.what()}};
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    entry["command"] = name;
    entry["outcome"] = outcome_name(result);
    commands.push_back(entry);
    report.timings.push_back({{"command", name}, {"ms", elapsed}});
    overall = combine(overall, result);
    if (result == outcome::fail || result == outcome::error) break;
  }

  switch (overall) {
    case outcome::pass:
      report.exit_code = 0;
      break;
    case outcome::fail:
      report.exit_code = 1;
      break;
    case outcome::error:
      report.exit_code = 2;
      break;
    case outcome::inconclusive:
      report.exit_code = 3;
      break;
  }
  report.content = {{"scenario", ctx.s.name},
                    {"inputs_digest", fnv1a_hex(to_json(ctx.s).dump())},
                    {"dimension", ctx.s.n},
                    {"order", ctx.s.order},
                    {"matrix_size", ctx.s.matrix_size},
                    {"seed", ctx.s.seed},
                    {"commands", commands},
                    {"outcome", outcome_name(overall)},
                    {"exit_code", report.exit_code}};
  return report;
}

std::string emit_report(const run_report& report, report_format format, bool include_timings) {
  json j = report.content;
  if (include_timings) j["timings"] = report.timings;
  if (format == report_format::json) return j.dump(2) + "\n";
  std::string out;
  flatten(j, "", out);
  return out;
}

json report_from_text(const std::string& text) {
  json out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    const auto sep = line.find(": ");
    if (sep == std::string::npos) throw config_error("report line " + std::to_string(number) + " has no value");
    try {
      const json value = json::parse(line.substr(sep + 2));
      if (sep == 0) {
        out = value;
      } else {
        out[json::json_pointer(line.substr(0, sep))] = value;
      }
    } catch (const json::exception& e) {
      throw config_error("report line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace dqw
