#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skc/config.hpp"

namespace skc {

enum class Rule { Beta, Ret, Async, Push, Set, Take, CondTrue, CondFalse, Fst, Snd };

std::string_view rule_name(Rule rule);

/// One step from a term to one of its immediate subterms, restricted to the
/// positions evaluation contexts may enter.
enum class Dir { AppFn, AppArg, IfCond, FstArg, SndArg, SetTarget };

using HolePath = std::vector<Dir>;

std::string path_text(const HolePath& path);

/// A located reduction opportunity. Internal redexes name a component index of
/// the normalized system; push names the restricted future it fills.
struct Redex {
  Rule rule;
  std::optional<std::size_t> component;
  std::optional<FutureId> future;
  HolePath path;

  bool operator==(const Redex&) const = default;
};

enum class StuckKind {
  UndefinedFunction,
  FutureInStoredBody,
  NonFunctionApplication,
  NonBooleanCondition,
  NonPairProjection,
  InvalidSetTarget,
  AwaitingFuture,
  UnboundVariable,
};

std::string_view stuck_kind_name(StuckKind kind);

struct StuckReason {
  StuckKind kind;
  std::string detail;

  std::string describe() const;
  bool operator==(const StuckReason&) const = default;
};

/// Result of splitting one running function's body as E_lambda[hole].
struct Decomposition {
  enum class Kind { Value, Redex, Stuck } kind;
  Rule rule = Rule::Beta;
  HolePath path;
  std::optional<StuckReason> stuck;
};

/// Follows the unique evaluation-context path through `body`. The contexts are
/// `[-]`, `(\x.M) E`, `E M`, `if E then M else M'`, `fst E`, `snd E`, and
/// `set E M`; a function name in `set`'s target position is not a ret redex.
Decomposition decompose(const Term& body, const Repo& repo);

NormalSystem normalize(const System& s);

/// Rebuilds a System from its prenex form.
System embed(const NormalSystem& s);

/// Restores the canonical component order after an in-place edit.
void sort_components(NormalSystem& s);

/// Component text with restricted futures masked and binders replaced by de
/// Bruijn indices. Identical for congruent components.
std::string masked_text(const Run& component, const NormalSystem& context);
std::string canonical_term_text(const Term& t, const NormalSystem* context = nullptr);

std::vector<Redex> find_redexes(const Config& cfg);

/// Applies `r` and re-normalizes. Throws Error(StaleRedex) if `r` is not one of
/// find_redexes(cfg).
Config apply_redex(const Config& cfg, const Redex& r);

bool congruent(const System& a, const System& b);
bool congruent(const NormalSystem& a, const NormalSystem& b);

/// Congruent systems and equal repositories.
bool same_config(const Config& a, const Config& b);

/// Components whose body is neither a value nor reducible, with the reason.
std::vector<std::pair<FutureId, StuckReason>> stuck_components(const Config& cfg);

}  // namespace skc
