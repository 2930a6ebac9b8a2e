#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <set>
#include <string>
#include <variant>

namespace skc {

/// Runtime name of a future. Futures are generated by the engine and print as
/// `$cN`; the distinguished root future prints as `$root` and is never restricted.
struct FutureId {
  static constexpr std::uint64_t kRootIndex = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t index = 0;

  static constexpr FutureId root() { return FutureId{kRootIndex}; }
  constexpr bool is_root() const { return index == kRootIndex; }
  std::string text() const;

  auto operator<=>(const FutureId&) const = default;
};

struct TermNode;

/// Immutable, shared handle to a function term M (or value V).
class Term {
 public:
  static Term var(std::string name);
  static Term lam(std::string binder, Term body);
  static Term app(Term fn, Term arg);
  static Term app(Term fn, Term arg, Term arg2);
  static Term async(Term body);
  static Term fn_name(std::string name);
  static Term future(FutureId id);
  static Term unit();
  static Term boolean(bool value);
  static Term pair(Term left, Term right);
  static Term if_then_else(Term cond, Term then_branch, Term else_branch);
  static Term fst(Term arg);
  static Term snd(Term arg);
  static Term set(Term target, Term body);
  static Term take(std::string name);

  const TermNode& node() const { return *node_; }

  template <class T>
  const T* as() const;

  template <class T>
  bool is() const {
    return as<T>() != nullptr;
  }

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const TermNode> node_;
};

struct Var {
  std::string name;
};
struct Lam {
  std::string binder;
  Term body;
};
struct App {
  Term fn;
  Term arg;
};
struct Async {
  Term body;
};
struct FnName {
  std::string name;
};
struct Future {
  FutureId id;
};
struct Unit {};
struct Bool {
  bool value;
};
struct Pair {
  Term left;
  Term right;
};
struct If {
  Term cond;
  Term then_branch;
  Term else_branch;
};
struct Fst {
  Term arg;
};
struct Snd {
  Term arg;
};
struct Set {
  Term target;
  Term body;
};
struct Take {
  std::string name;
};

struct TermNode {
  std::variant<Var, Lam, App, Async, FnName, Future, Unit, Bool, Pair, If, Fst, Snd, Set, Take> v;
};

template <class T>
const T* Term::as() const {
  return std::get_if<T>(&node_->v);
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <class Visitor>
decltype(auto) visit(Visitor&& visitor, const Term& t) {
  return std::visit(std::forward<Visitor>(visitor), t.node().v);
}

/// True for the value forms: variables, lambdas, futures, unit, booleans, and
/// pairs of values. Function names are not values.
bool is_value(const Term& t);

std::set<FutureId> futures_of(const Term& t);
std::set<std::string> free_vars(const Term& t);

/// Every variable name occurring in `t`, bound or free.
std::set<std::string> var_names(const Term& t);

/// Picks `base`, `base'`, `base''`, ... until the name is not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Capture-avoiding M{v/x}. Throws Error(NotAValue) unless `v` is a value.
Term subst_var(const Term& t, const std::string& x, const Term& v);

/// M{v/c}. Terms do not bind futures, so this is plain replacement.
Term subst_future(const Term& t, FutureId c, const Term& v);

/// Replaces every `FnName name` in `t` that is not under a binder for `var` by `Var var`.
Term bind_fn_name(const Term& t, const std::string& name, const std::string& var);

bool alpha_eq(const Term& a, const Term& b);

/// Alpha-equivalence where future occurrences are compared by `futures_match`
/// rather than by identity. The callback may record a correspondence.
bool alpha_eq_with(const Term& a, const Term& b,
                   const std::function<bool(FutureId, FutureId)>& futures_match);

std::size_t term_size(const Term& t);

}  // namespace skc
