#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "skc/semantics.hpp"

namespace skc {

inline constexpr std::size_t kDefaultMaxStates = 50000;
inline constexpr std::size_t kDefaultMaxDepth = 500;

/// Fingerprint of a configuration that ignores component order, `0`s,
/// restriction order, and the names of restricted futures. Equal keys do not
/// imply congruence; explore() confirms with same_config().
struct CanonicalKey {
  std::string text;

  bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept { return std::hash<std::string>{}(k.text); }
};

CanonicalKey canonical_key(const Config& cfg);

struct Edge {
  std::size_t from;
  Redex redex;
  std::size_t to;
};

struct StateGraph {
  std::vector<Config> states;
  std::vector<CanonicalKey> keys;
  std::vector<std::size_t> depth;
  std::vector<Edge> edges;
  std::size_t initial = 0;
  std::vector<std::size_t> value_finals;
  std::vector<std::size_t> stuck_finals;
  bool truncated = false;
};

/// Breadth-first closure of `cfg` under every redex, deduplicated up to
/// congruence and repository equality.
StateGraph explore(const Config& cfg, std::size_t max_states = kDefaultMaxStates,
                   std::size_t max_depth = kDefaultMaxDepth);

struct OutcomeSummary {
  std::vector<Repo> final_repos;
  std::vector<Term> root_values;
  std::size_t value_finals = 0;
  std::size_t stuck_finals = 0;
  std::vector<std::string> stuck_reasons;
  /// Exactly one final state, and it is value-terminated.
  bool deterministic = false;
  bool truncated = false;
};

OutcomeSummary final_outcomes(const StateGraph& g);

/// Graphviz rendering: states labelled by key prefix, finals marked, edges by rule.
std::string to_dot(const StateGraph& g);

}  // namespace skc
