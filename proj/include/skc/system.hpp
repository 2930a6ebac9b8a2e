#pragma once

#include <memory>
#include <set>
#include <variant>

#include "skc/term.hpp"

namespace skc {

struct SystemNode;

/// Immutable handle to a system S: running functions `c <= M`, parallel
/// composition, restriction `nu c. S`, and the empty system `0`.
class System {
 public:
  static System run(FutureId future, Term body);
  static System par(System left, System right);
  static System res(FutureId future, System body);
  static System nil();

  const SystemNode& node() const { return *node_; }

  template <class T>
  const T* as() const;

 private:
  explicit System(std::shared_ptr<const SystemNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const SystemNode> node_;
};

struct Run {
  FutureId future;
  Term body;
};
struct Par {
  System left;
  System right;
};
struct Res {
  FutureId future;
  System body;
};
struct Nil {};

struct SystemNode {
  std::variant<Run, Par, Res, Nil> v;
};

template <class T>
const T* System::as() const {
  return std::get_if<T>(&node_->v);
}

/// Free futures of a system. The producer position of `c <= M` counts as an
/// occurrence of c.
std::set<FutureId> free_futures(const System& s);

/// Every future id occurring in `s`, including restricted ones.
std::set<FutureId> all_futures(const System& s);

/// S{v/c}: replaces free occurrences of c inside the terms of `s`. Restrictions
/// of c shadow the substitution.
System subst_future(const System& s, FutureId c, const Term& v);

/// Renames free occurrences of `from` (producer positions included) to `to`.
/// The caller guarantees `to` does not occur in `s`.
System rename_future(const System& s, FutureId from, FutureId to);

}  // namespace skc
