#pragma once

#include <cstdint>
#include <vector>

#include "skc/repo.hpp"
#include "skc/system.hpp"

namespace skc {

/// Prenex form of a system: every restriction at the front, a flat list of
/// running functions, no `0`. Congruent to the system it was built from.
struct NormalSystem {
  std::vector<FutureId> restricted;
  std::vector<Run> components;

  bool is_restricted(FutureId c) const;
  const Run* component_for(FutureId c) const;
};

/// A configuration <S | D> plus the counter that names the next future.
struct Config {
  NormalSystem system;
  Repo repo;
  std::uint64_t fresh_counter = 0;

  /// Normalizes `s` and sets the counter past every future index in it.
  static Config make(const System& s, Repo repo);
};

}  // namespace skc
