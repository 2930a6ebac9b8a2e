#pragma once

#include <string>
#include <string_view>

#include "skc/config.hpp"
#include "skc/parser.hpp"
#include "skc/pretty.hpp"
#include "skc/repo.hpp"

namespace skc::testing {

inline Term T(std::string_view text) { return parse_term(text, {.allow_futures = true}); }
inline System S(std::string_view text) { return parse_system(text); }

inline Repo repo_of(std::initializer_list<std::pair<const char*, const char*>> defs) {
  Repo d;
  for (const auto& [name, body] : defs) d = d.define(name, T(body));
  return d;
}

inline Config config_of(std::string_view system, Repo repo = {}) { return Config::make(S(system), std::move(repo)); }

inline FutureId C(std::uint64_t i) { return FutureId{i}; }

}  // namespace skc::testing
