#include "skc/runtime.hpp"

#include <algorithm>
#include <random>

#include "skc/error.hpp"
#include "skc/pretty.hpp"
#include "skc/services.hpp"

namespace skc {

std::string_view outcome_kind_name(Outcome::Kind kind) {
  switch (kind) {
    case Outcome::Kind::Value: return "value";
    case Outcome::Kind::Stuck: return "stuck";
    case Outcome::Kind::StepLimit: return "step_limit";
  }
  return "?";
}

Config boot(const Program& program) {
  Repo d = builtin_repo();
  const auto& builtins = builtin_names();
  for (const auto& [name, body] : program.defs) {
    if (std::find(builtins.begin(), builtins.end(), name) != builtins.end())
      throw Error(ErrorKind::BuiltinCollision, name);
    d = d.define(name, body);
  }
  for (const auto& e : program.events) {
    if (std::find(builtins.begin(), builtins.end(), e.event) != builtins.end())
      throw Error(ErrorKind::BuiltinCollision, e.event);
    d = install_event(d, e);
  }
  return Config::make(System::run(FutureId::root(), program.main), std::move(d));
}

namespace {

Outcome settle(const Config& cfg) {
  auto stuck = stuck_components(cfg);
  const Run* root = cfg.system.component_for(FutureId::root());
  if (root && is_value(root->body)) return {Outcome::Kind::Value, cfg, root->body, std::move(stuck)};
  return {Outcome::Kind::Stuck, cfg, std::nullopt, std::move(stuck)};
}

}  // namespace

RunResult run(const Config& cfg, const Strategy& strategy, std::size_t max_steps, RunOptions options) {
  RunResult result{{Outcome::Kind::StepLimit, cfg, std::nullopt, {}}, {}};
  std::mt19937_64 rng(strategy.seed);
  Config current = cfg;
  for (std::size_t n = 0;; ++n) {
    auto redexes = find_redexes(current);
    if (redexes.empty()) {
      result.outcome = settle(current);
      return result;
    }
    if (n == max_steps) {
      result.outcome = {Outcome::Kind::StepLimit, current, std::nullopt, {}};
      return result;
    }
    std::size_t pick = strategy.kind == Strategy::Kind::Random ? rng() % redexes.size() : 0;
    const Redex& r = redexes[pick];
    std::string component = r.component ? current.system.components[*r.component].future.text() : r.future->text();
    current = apply_redex(current, r);
    result.trace.push_back({n + 1, r, std::move(component), options.record_config_text ? pretty(current) : ""});
  }
}

}  // namespace skc
