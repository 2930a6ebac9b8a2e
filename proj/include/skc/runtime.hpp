#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skc/parser.hpp"
#include "skc/semantics.hpp"

namespace skc {

inline constexpr std::size_t kDefaultMaxSteps = 100000;

struct Strategy {
  enum class Kind { Deterministic, Random };

  Kind kind = Kind::Deterministic;
  std::uint64_t seed = 0;

  static Strategy deterministic() { return {}; }
  static Strategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

struct Step {
  std::size_t index;
  Redex redex;
  /// Future of the rewritten component, or the pushed future.
  std::string component;
  std::string config_text;

  Rule rule() const { return redex.rule; }
};

struct Outcome {
  enum class Kind { Value, Stuck, StepLimit };

  Kind kind;
  Config final_config;
  /// The root's value when kind == Value.
  std::optional<Term> value;
  /// Stuck components; for a Value outcome these are leftover daemons.
  std::vector<std::pair<FutureId, StuckReason>> stuck;
};

struct RunResult {
  Outcome outcome;
  std::vector<Step> trace;
};

struct RunOptions {
  /// Fill Step::config_text. Long divergent runs can turn this off.
  bool record_config_text = true;
};

/// Builtins + program defs + event definitions, running `$root <= main`.
/// Throws Error(BuiltinCollision) or Error(EventCollision) on name clashes.
Config boot(const Program& program);

RunResult run(const Config& cfg, const Strategy& strategy, std::size_t max_steps = kDefaultMaxSteps,
              RunOptions options = {});

std::string_view outcome_kind_name(Outcome::Kind kind);

}  // namespace skc
