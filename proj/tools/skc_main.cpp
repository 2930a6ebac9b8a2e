// skc: parse, run, and explore Serverless Kernel Calculus programs.
//
// Exit codes: 0 value / success, 1 parse or load error, 2 I/O error,
// 3 step limit, 4 stuck, 5 truncated exploration under --strict.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "skc/error.hpp"
#include "skc/explorer.hpp"
#include "skc/json_io.hpp"
#include "skc/pretty.hpp"
#include "skc/runtime.hpp"

namespace {

enum Exit { kOk = 0, kParse = 1, kIo = 2, kLimit = 3, kStuck = 4, kTruncated = 5 };

struct CliConfig {
  std::string command;
  std::string input;
  std::string strategy = "det";
  std::uint64_t seed = 0;
  std::size_t max_steps = skc::kDefaultMaxSteps;
  std::size_t max_states = skc::kDefaultMaxStates;
  std::size_t max_depth = skc::kDefaultMaxDepth;
  bool trace = false;
  std::string format = "text";
  std::string dot_path;
  bool strict = false;
};

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool use_color() {
  const char* env = std::getenv("SKC_COLOR");
  if (env && std::string_view(env) == "never") return false;
  return isatty(fileno(stdout));
}

std::string paint(std::string_view text, const char* code, bool color) {
  if (!color) return std::string(text);
  return std::string("\x1b[") + code + "m" + std::string(text) + "\x1b[0m";
}

void print_repo(std::ostream& os, const skc::Repo& d) {
  os << "repo:\n";
  for (const auto& [name, body] : d.entries()) os << "  " << name << " = " << skc::pretty(body) << '\n';
}

int cmd_parse(const CliConfig& cfg) {
  auto program = skc::parse_program(read_file(cfg.input));
  if (cfg.format == "json")
    std::cout << skc::to_json(program).dump(2) << '\n';
  else
    std::cout << skc::pretty(program);
  return kOk;
}

int cmd_run(const CliConfig& cfg) {
  auto config = skc::boot(skc::parse_program(read_file(cfg.input)));
  auto strategy = cfg.strategy == "random" ? skc::Strategy::random(cfg.seed) : skc::Strategy::deterministic();
  auto result = skc::run(config, strategy, cfg.max_steps, {.record_config_text = cfg.trace || cfg.format == "json"});
  const auto& out = result.outcome;

  if (cfg.format == "json") {
    auto doc = skc::to_json(result);
    if (!cfg.trace) doc.erase("trace");
    std::cout << doc.dump(2) << '\n';
  } else {
    bool color = use_color();
    if (cfg.trace) {
      for (const auto& s : result.trace) {
        std::ostringstream rule;
        rule << std::left << std::setw(7) << skc::rule_name(s.rule());
        std::cout << std::right << std::setw(5) << s.index << "  " << paint(rule.str(), "36", color) << ' '
                  << std::left << std::setw(6) << s.component << ' ' << std::setw(14)
                  << skc::path_text(s.redex.path) << ' ' << s.config_text << '\n';
      }
    }
    std::cout << "outcome: " << skc::outcome_kind_name(out.kind);
    if (out.value) std::cout << ' ' << skc::pretty(*out.value);
    std::cout << "\nsteps: " << result.trace.size() << '\n';
    std::cout << "system: " << skc::pretty(out.final_config.system) << '\n';
    print_repo(std::cout, out.final_config.repo);
    const char* label = out.kind == skc::Outcome::Kind::Value ? "warning" : "stuck";
    for (const auto& [c, reason] : out.stuck)
      std::cout << paint(label, "33", color) << ": " << c.text() << ": " << reason.describe() << '\n';
  }
  switch (out.kind) {
    case skc::Outcome::Kind::Value: return kOk;
    case skc::Outcome::Kind::Stuck: return kStuck;
    case skc::Outcome::Kind::StepLimit: return kLimit;
  }
  return kOk;
}

std::string plural(std::size_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

int cmd_explore(const CliConfig& cfg) {
  auto config = skc::boot(skc::parse_program(read_file(cfg.input)));
  auto graph = skc::explore(config, cfg.max_states, cfg.max_depth);
  auto summary = skc::final_outcomes(graph);

  if (!cfg.dot_path.empty()) {
    std::ofstream dot(cfg.dot_path);
    if (!dot) throw IoError{"cannot write " + cfg.dot_path};
    dot << skc::to_dot(graph);
  }

  if (cfg.format == "json") {
    std::cout << skc::summary_json(graph, summary).dump(2) << '\n';
  } else {
    const char* verdict = summary.deterministic ? "deterministic" : "nondeterministic";
    std::size_t finals = summary.value_finals + summary.stuck_finals;
    std::cout << "states: " << graph.states.size() << '\n'
              << "edges: " << graph.edges.size() << '\n'
              << "finals: " << finals << " (value " << summary.value_finals << ", stuck " << summary.stuck_finals
              << ")\n"
              << plural(summary.final_repos.size(), "distinct final repository", "distinct final repositories")
              << "; " << verdict << '\n'
              << plural(finals, "final state", "final states") << "; " << verdict << '\n'
              << "truncated: " << (summary.truncated ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < summary.final_repos.size(); ++i)
      std::cout << "final repo " << i + 1 << ": " << skc::pretty(summary.final_repos[i]) << '\n';
    for (const auto& v : summary.root_values) std::cout << "root value: " << skc::pretty(v) << '\n';
    for (const auto& r : summary.stuck_reasons) std::cout << "stuck: " << r << '\n';
  }
  if (summary.truncated) {
    std::cerr << "skc: exploration truncated at bounds (max-states " << cfg.max_states << ", max-depth "
              << cfg.max_depth << ")\n";
    if (cfg.strict) return kTruncated;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serverless Kernel Calculus engine"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* parse = app.add_subcommand("parse", "Print the desugared program");
  auto* run = app.add_subcommand("run", "Reduce a program to an outcome");
  auto* explore = app.add_subcommand("explore", "Enumerate every reachable configuration");
  for (auto* sub : {parse, run, explore}) {
    sub->add_option("file", cfg.input, "Program (.skc)")->required();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  }
  run->add_option("--strategy", cfg.strategy, "Scheduling strategy")->check(CLI::IsMember({"det", "random"}));
  run->add_option("--seed", cfg.seed, "Seed for the random strategy");
  run->add_option("--max-steps", cfg.max_steps, "Step bound")->check(CLI::PositiveNumber);
  run->add_flag("--trace", cfg.trace, "Print every reduction step");
  explore->add_option("--max-states", cfg.max_states, "State bound")->check(CLI::PositiveNumber);
  explore->add_option("--max-depth", cfg.max_depth, "Depth bound")->check(CLI::PositiveNumber);
  explore->add_option("--dot", cfg.dot_path, "Write the state graph as DOT");
  explore->add_flag("--strict", cfg.strict, "Exit 5 if the exploration was truncated");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse) return cmd_parse(cfg);
    if (*run) return cmd_run(cfg);
    return cmd_explore(cfg);
  } catch (const IoError& e) {
    std::cerr << "skc: " << e.message << '\n';
    return kIo;
  } catch (const skc::Error& e) {
    std::cerr << "skc: " << cfg.input << ": " << e.what() << '\n';
    return kParse;
  }
}
