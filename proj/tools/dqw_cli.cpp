#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dqw/error.hpp"
#include "dqw/scenario.hpp"

namespace {

struct common_options {
  std::string scenario;
  std::optional<int> max_order;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  bool no_timings = false;
};

void add_common(CLI::App* cmd, common_options& o) {
  cmd->add_option("--scenario", o.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--max-order", o.max_order, "Override the truncation order K")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o.seed, "Override the random seed");
  cmd->add_option("--out", o.out, "Write the report here instead of stdout");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--no-timings", o.no_timings, "Leave timings out of the report");
}

int execute(const common_options& o, std::optional<std::vector<std::string>> commands) {
  dqw::scenario s;
  try {
    s = dqw::load_scenario(o.scenario);
  } catch (const dqw::config_error& e) {
    std::cerr << "dqw: " << e.what() << "\n";
    return 2;
  }
  dqw::scenario_overrides overrides;
  overrides.order = o.max_order;
  overrides.seed = o.seed;
  overrides.commands = std::move(commands);
  const dqw::run_report report = dqw::run_scenario(s, overrides);
  const std::string text = dqw::emit_report(
      report, o.format == "text" ? dqw::report_format::text : dqw::report_format::json, !o.no_timings);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "dqw: cannot write " << o.out << "\n";
      return 2;
    }
    file << text;
  }
  if (report.content.contains("error")) std::cerr << "dqw: " << report.content["error"].get<std::string>() << "\n";
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformation quantization workbench: star products, tau and positive functionals"};
  app.require_subcommand(1);

  common_options options;
  struct verb {
    const char* name;
    const char* help;
    std::optional<std::vector<std::string>> commands;
  };
  const std::vector<verb> verbs = {
      {"validate", "Check associativity, Hermiticity, unitality and the Poisson bracket", std::vector<std::string>{"validate"}},
      {"build-tau", "Construct tau order by order and verify it", std::vector<std::string>{"build-tau"}},
      {"deform", "Build the deformed functional", std::vector<std::string>{"deform"}},
      {"check-pos", "Positivity verdicts for the undeformed and deformed functionals", std::vector<std::string>{"check-pos"}},
      {"run", "Run the scenario's command list", std::nullopt},
  };
  std::vector<CLI::App*> subcommands;
  for (const auto& v : verbs) {
    CLI::App* cmd = app.add_subcommand(v.name, v.help);
    add_common(cmd, options);
    subcommands.push_back(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (std::size_t i = 0; i < verbs.size(); ++i) {
    if (subcommands[i]->parsed()) return execute(options, verbs[i].commands);
  }
  return 2;
}
