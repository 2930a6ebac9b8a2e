#pragma once

#include <string_view>

#include "skc/parser.hpp"
#include "skc/repo.hpp"

namespace skc {

/// `callHandler` and `fix`, which every configuration's repository starts with.
Repo builtin_repo();

/// Adds `event |-> callHandler \_.handler`. The handler is wrapped so that it
/// is not expanded by ret before the event fires. Throws Error(EventCollision)
/// if the event name is already defined.
Repo install_event(const Repo& repo, const EventBinding& binding);

/// Runnable source of the Tailor user-registration excerpt (corpus/tailor_excerpt.skc).
std::string_view tailor_source();

/// Builtins plus every definition and event of tailor_source().
Repo tailor_repo();

}  // namespace skc
