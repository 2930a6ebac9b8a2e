#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skc/term.hpp"

namespace skc {

/// The definition repository D: a finite partial map from function names to
/// bodies. Keeps insertion order for printing; equality ignores order.
/// Stored bodies never contain futures.
class Repo {
 public:
  using Entry = std::pair<std::string, Term>;

  Repo() = default;

  std::optional<Term> lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }

  /// D[name -> body]. Overrides keep the original position.
  /// Throws Error(FutureInStoredBody) if `body` mentions a future.
  Repo define(const std::string& name, Term body) const;

  /// undef(D, name). Throws Error(Undefined) if `name` has no entry.
  Repo undef(const std::string& name) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Same domain and alpha-equal bodies per name.
  friend bool operator==(const Repo& a, const Repo& b);

 private:
  const Term* find(const std::string& name) const;

  std::vector<Entry> entries_;
};

}  // namespace skc
