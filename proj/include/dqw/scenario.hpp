#ifndef DQW_SCENARIO_HPP
#define DQW_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqw/json_io.hpp"

namespace dqw {

struct random_test_params {
  int count = 0;
  int max_q_degree = 3;
  int max_lambda = 1;
  int terms = 3;
};

struct glue_spec {
  json weight;  ///< term list
  state_functional functional;
};

/// A parsed scenario. `star_product` and `tau` keep their directive form so
/// that the scenario serializes back to what was read.
struct scenario {
  std::string name;
  int n = 0;
  int order = 0;
  int matrix_size = 1;
  std::uint64_t seed = 0;
  json star_product;
  std::string tau_method = "solver";  ///< "solver" or "closed_form"
  bool tau_hermitian = true;
  state_functional functional;
  std::vector<glue_spec> gluing;
  std::vector<matrix_w_element> explicit_tests;
  random_test_params random_tests;
  std::vector<std::string> commands;
};

struct scenario_overrides {
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
  /// Replaces the scenario's command list.
  std::optional<std::vector<std::string>> commands;
};

/// Throws config_error with the offending field, or with the parser's
/// line and column for malformed JSON.
scenario parse_scenario(const json& j);
scenario parse_scenario_text(const std::string& text);
scenario load_scenario(const std::string& path);
json to_json(const scenario& s);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

/// Deterministic test matrices from the scenario seed.
std::vector<matrix_w_element> random_test_matrices(int n, int order, int size, const random_test_params& params,
                                                   std::uint64_t seed);

struct run_report {
  /// Everything except timings; replaying a scenario reproduces it exactly.
  json content;
  /// Milliseconds per command, in command order.
  json timings;
  int exit_code = 0;
};

/// Runs the commands in order. Exit codes: 0 all pass, 1 a violation or a
/// negative verdict, 2 configuration error, 3 inconclusive outcomes only.
/// Configuration errors inside a command are reported in the content.
run_report run_scenario(const scenario& s, const scenario_overrides& overrides = {});

enum class report_format { json, text };

/// Canonical JSON (sorted keys) or one "/json/pointer: value" line per leaf.
std::string emit_report(const run_report& report, report_format format, bool include_timings = true);
/// Inverse of the text format.
json report_from_text(const std::string& text);

}  // namespace dqw

#endif  // DQW_SCENARIO_HPP
