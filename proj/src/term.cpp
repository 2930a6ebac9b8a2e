#include "skc/term.hpp"

#include <utility>
#include <vector>

#include "skc/error.hpp"

namespace skc {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownSugar: return "UnknownSugar";
    case ErrorKind::DuplicateDef: return "DuplicateDef";
    case ErrorKind::UndefinedHandler: return "UndefinedHandler";
    case ErrorKind::FutureInSource: return "FutureInSource";
    case ErrorKind::FutureInStoredBody: return "FutureInStoredBody";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::NotAValue: return "NotAValue";
    case ErrorKind::BuiltinCollision: return "BuiltinCollision";
    case ErrorKind::EventCollision: return "EventCollision";
    case ErrorKind::StaleRedex: return "StaleRedex";
  }
  return "Error";
}

std::string FutureId::text() const {
  if (is_root()) return "$root";
  return "$c" + std::to_string(index);
}

#define SKC_MAKE(...) Term(std::make_shared<const TermNode>(TermNode{__VA_ARGS__}))

Term Term::var(std::string name) { return SKC_MAKE(Var{std::move(name)}); }
Term Term::lam(std::string binder, Term body) {
  return SKC_MAKE(Lam{std::move(binder), std::move(body)});
}
Term Term::app(Term fn, Term arg) { return SKC_MAKE(App{std::move(fn), std::move(arg)}); }
Term Term::app(Term fn, Term arg, Term arg2) {
  return app(app(std::move(fn), std::move(arg)), std::move(arg2));
}
Term Term::async(Term body) { return SKC_MAKE(Async{std::move(body)}); }
Term Term::fn_name(std::string name) { return SKC_MAKE(FnName{std::move(name)}); }
Term Term::future(FutureId id) { return SKC_MAKE(Future{id}); }
Term Term::unit() {
  static const Term shared = SKC_MAKE(Unit{});
  return shared;
}
Term Term::boolean(bool value) { return SKC_MAKE(Bool{value}); }
Term Term::pair(Term left, Term right) { return SKC_MAKE(Pair{std::move(left), std::move(right)}); }
Term Term::if_then_else(Term cond, Term then_branch, Term else_branch) {
  return SKC_MAKE(If{std::move(cond), std::move(then_branch), std::move(else_branch)});
}
Term Term::fst(Term arg) { return SKC_MAKE(Fst{std::move(arg)}); }
Term Term::snd(Term arg) { return SKC_MAKE(Snd{std::move(arg)}); }
Term Term::set(Term target, Term body) { return SKC_MAKE(Set{std::move(target), std::move(body)}); }
Term Term::take(std::string name) { return SKC_MAKE(Take{std::move(name)}); }

#undef SKC_MAKE

bool is_value(const Term& t) {
  return visit(overloaded{
                   [](const Var&) { return true; },
                   [](const Lam&) { return true; },
                   [](const Future&) { return true; },
                   [](const Unit&) { return true; },
                   [](const Bool&) { return true; },
                   [](const Pair& p) { return is_value(p.left) && is_value(p.right); },
                   [](const auto&) { return false; },
               },
               t);
}

namespace {

// Calls `f` on each immediate subterm.
template <class F>
void for_each_child(const Term& t, F&& f) {
  visit(overloaded{
            [&](const Lam& n) { f(n.body); },
            [&](const App& n) {
              f(n.fn);
              f(n.arg);
            },
            [&](const Async& n) { f(n.body); },
            [&](const Pair& n) {
              f(n.left);
              f(n.right);
            },
            [&](const If& n) {
              f(n.cond);
              f(n.then_branch);
              f(n.else_branch);
            },
            [&](const Fst& n) { f(n.arg); },
            [&](const Snd& n) { f(n.arg); },
            [&](const Set& n) {
              f(n.target);
              f(n.body);
            },
            [](const auto&) {},
        },
        t);
}

// Rebuilds `t` with each immediate subterm replaced by `f(child)`. Lambdas are
// handled by callers because they bind.
template <class F>
Term map_children(const Term& t, F&& f) {
  return visit(overloaded{
                   [&](const App& n) { return Term::app(f(n.fn), f(n.arg)); },
                   [&](const Async& n) { return Term::async(f(n.body)); },
                   [&](const Pair& n) { return Term::pair(f(n.left), f(n.right)); },
                   [&](const If& n) {
                     return Term::if_then_else(f(n.cond), f(n.then_branch), f(n.else_branch));
                   },
                   [&](const Fst& n) { return Term::fst(f(n.arg)); },
                   [&](const Snd& n) { return Term::snd(f(n.arg)); },
                   [&](const Set& n) { return Term::set(f(n.target), f(n.body)); },
                   [&](const Lam& n) { return Term::lam(n.binder, f(n.body)); },
                   [&](const auto&) { return t; },
               },
               t);
}

void collect_futures(const Term& t, std::set<FutureId>& out) {
  if (auto f = t.as<Future>()) {
    out.insert(f->id);
    return;
  }
  for_each_child(t, [&](const Term& c) { collect_futures(c, out); });
}

void collect_free_vars(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  if (auto v = t.as<Var>()) {
    for (const auto& b : bound)
      if (b == v->name) return;
    out.insert(v->name);
    return;
  }
  if (auto l = t.as<Lam>()) {
    bound.push_back(l->binder);
    collect_free_vars(l->body, bound, out);
    bound.pop_back();
    return;
  }
  for_each_child(t, [&](const Term& c) { collect_free_vars(c, bound, out); });
}

void collect_var_names(const Term& t, std::set<std::string>& out) {
  if (auto v = t.as<Var>()) out.insert(v->name);
  if (auto l = t.as<Lam>()) out.insert(l->binder);
  for_each_child(t, [&](const Term& c) { collect_var_names(c, out); });
}

Term subst_var_impl(const Term& t, const std::string& x, const Term& v,
                    const std::set<std::string>& v_free) {
  if (auto var = t.as<Var>()) return var->name == x ? v : t;
  if (auto l = t.as<Lam>()) {
    if (l->binder == x) return t;
    auto body_free = free_vars(l->body);
    if (!body_free.contains(x)) return t;
    if (v_free.contains(l->binder)) {
      std::set<std::string> avoid = v_free;
      avoid.insert(x);
      avoid.insert(body_free.begin(), body_free.end());
      auto renamed = fresh_name(l->binder, avoid);
      auto body = subst_var_impl(l->body, l->binder, Term::var(renamed), {renamed});
      return Term::lam(renamed, subst_var_impl(body, x, v, v_free));
    }
    return Term::lam(l->binder, subst_var_impl(l->body, x, v, v_free));
  }
  return map_children(t, [&](const Term& c) { return subst_var_impl(c, x, v, v_free); });
}

struct BinderScope {
  std::vector<std::pair<std::string, std::string>> pairs;

  // Returns the de Bruijn level for a name on each side, or -1 if free.
  std::pair<long, long> lookup(const std::string& a, const std::string& b) const {
    long la = -1, lb = -1;
    for (long i = static_cast<long>(pairs.size()) - 1; i >= 0; --i) {
      if (la < 0 && pairs[i].first == a) la = i;
      if (lb < 0 && pairs[i].second == b) lb = i;
    }
    return {la, lb};
  }
};

bool alpha_impl(const Term& a, const Term& b, BinderScope& scope,
                const std::function<bool(FutureId, FutureId)>& futures_match) {
  if (a.node().v.index() != b.node().v.index()) return false;
  return visit(
      overloaded{
          [&](const Var& va) {
            const auto& vb = *b.as<Var>();
            auto [la, lb] = scope.lookup(va.name, vb.name);
            if (la < 0 && lb < 0) return va.name == vb.name;
            return la == lb;
          },
          [&](const Lam& la) {
            const auto& lb = *b.as<Lam>();
            scope.pairs.emplace_back(la.binder, lb.binder);
            bool ok = alpha_impl(la.body, lb.body, scope, futures_match);
            scope.pairs.pop_back();
            return ok;
          },
          [&](const App& n) {
            const auto& m = *b.as<App>();
            return alpha_impl(n.fn, m.fn, scope, futures_match) &&
                   alpha_impl(n.arg, m.arg, scope, futures_match);
          },
          [&](const Async& n) { return alpha_impl(n.body, b.as<Async>()->body, scope, futures_match); },
          [&](const FnName& n) { return n.name == b.as<FnName>()->name; },
          [&](const Future& n) { return futures_match(n.id, b.as<Future>()->id); },
          [&](const Unit&) { return true; },
          [&](const Bool& n) { return n.value == b.as<Bool>()->value; },
          [&](const Pair& n) {
            const auto& m = *b.as<Pair>();
            return alpha_impl(n.left, m.left, scope, futures_match) &&
                   alpha_impl(n.right, m.right, scope, futures_match);
          },
          [&](const If& n) {
            const auto& m = *b.as<If>();
            return alpha_impl(n.cond, m.cond, scope, futures_match) &&
                   alpha_impl(n.then_branch, m.then_branch, scope, futures_match) &&
                   alpha_impl(n.else_branch, m.else_branch, scope, futures_match);
          },
          [&](const Fst& n) { return alpha_impl(n.arg, b.as<Fst>()->arg, scope, futures_match); },
          [&](const Snd& n) { return alpha_impl(n.arg, b.as<Snd>()->arg, scope, futures_match); },
          [&](const Set& n) {
            const auto& m = *b.as<Set>();
            return alpha_impl(n.target, m.target, scope, futures_match) &&
                   alpha_impl(n.body, m.body, scope, futures_match);
          },
          [&](const Take& n) { return n.name == b.as<Take>()->name; },
      },
      a);
}

}  // namespace

std::set<FutureId> futures_of(const Term& t) {
  std::set<FutureId> out;
  collect_futures(t, out);
  return out;
}

std::set<std::string> free_vars(const Term& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free_vars(t, bound, out);
  return out;
}

std::set<std::string> var_names(const Term& t) {
  std::set<std::string> out;
  collect_var_names(t, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string name = base;
  while (avoid.contains(name)) name += '\'';
  return name;
}

Term subst_var(const Term& t, const std::string& x, const Term& v) {
  if (!is_value(v)) throw Error(ErrorKind::NotAValue, "substitution for variable " + x);
  return subst_var_impl(t, x, v, free_vars(v));
}

Term subst_future(const Term& t, FutureId c, const Term& v) {
  if (!is_value(v)) throw Error(ErrorKind::NotAValue, "substitution for future " + c.text());
  struct Rec {
    FutureId c;
    const Term& v;
    Term operator()(const Term& t) const {
      if (auto f = t.as<Future>()) return f->id == c ? v : t;
      return map_children(t, *this);
    }
  };
  return Rec{c, v}(t);
}

Term bind_fn_name(const Term& t, const std::string& name, const std::string& var) {
  struct Rec {
    const std::string& name;
    const std::string& var;
    Term operator()(const Term& t) const {
      if (auto f = t.as<FnName>()) return f->name == name ? Term::var(var) : t;
      if (auto l = t.as<Lam>(); l && l->binder == var) return t;
      return map_children(t, *this);
    }
  };
  return Rec{name, var}(t);
}

bool alpha_eq(const Term& a, const Term& b) {
  return alpha_eq_with(a, b, [](FutureId x, FutureId y) { return x == y; });
}

bool alpha_eq_with(const Term& a, const Term& b,
                   const std::function<bool(FutureId, FutureId)>& futures_match) {
  BinderScope scope;
  return alpha_impl(a, b, scope, futures_match);
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for_each_child(t, [&](const Term& c) { n += term_size(c); });
  return n;
}

}  // namespace skc
