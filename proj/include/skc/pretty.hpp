#pragma once

#include <string>

#include "skc/config.hpp"
#include "skc/parser.hpp"

namespace skc {

// Printed forms re-parse to alpha-equivalent terms. Futures print as `$cN`;
// systems use `c <= M`, `|`, `nu c.S`, and `0`.
std::string pretty(const Term& t);
std::string pretty(const System& s);
std::string pretty(const NormalSystem& s);
std::string pretty(const Repo& d);
std::string pretty(const Config& cfg);
std::string pretty(const Program& p);

}  // namespace skc
