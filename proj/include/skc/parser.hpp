#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skc/system.hpp"
#include "skc/term.hpp"

namespace skc {

struct EventBinding {
  std::string event;
  std::string handler;
};

/// A parsed `.skc` file: the initial repository, event directives, and the
/// main term. Source programs never contain futures.
struct Program {
  std::vector<std::pair<std::string, Term>> defs;
  std::vector<EventBinding> events;
  Term main = Term::unit();
};

struct ParseOptions {
  /// Accept `$cN` / `$root` tokens. Off for source programs.
  bool allow_futures = false;
};

/// Parses one term and eliminates all sugar: `let`, `let rec` (through `fix`),
/// `\(x,y).M`, pair expressions over non-values, and `callHandler(f)`.
/// Identifiers bound by an enclosing lambda are variables; all others are
/// function names.
Term parse_term(std::string_view text, ParseOptions options = {});

/// Parses a system written with `c <= M`, `|`, `nu c.S`, and `0`. Futures are allowed.
System parse_system(std::string_view text);

/// Parses a `.skc` program. Throws SyntaxError on malformed input, duplicate
/// defs, undefined event handlers, and future tokens.
Program parse_program(std::string_view text);

/// Names every program sees without defining them.
const std::vector<std::string>& builtin_names();

}  // namespace skc
