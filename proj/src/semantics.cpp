#include "skc/semantics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "skc/error.hpp"
#include "skc/pretty.hpp"

namespace skc {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::Beta: return "beta";
    case Rule::Ret: return "ret";
    case Rule::Async: return "async";
    case Rule::Push: return "push";
    case Rule::Set: return "set";
    case Rule::Take: return "take";
    case Rule::CondTrue: return "cond_t";
    case Rule::CondFalse: return "cond_f";
    case Rule::Fst: return "fst";
    case Rule::Snd: return "snd";
  }
  return "?";
}

std::string path_text(const HolePath& path) {
  if (path.empty()) return "[]";
  std::string out;
  for (auto d : path) {
    if (!out.empty()) out += '.';
    switch (d) {
      case Dir::AppFn: out += "fn"; break;
      case Dir::AppArg: out += "arg"; break;
      case Dir::IfCond: out += "cond"; break;
      case Dir::FstArg: out += "fst"; break;
      case Dir::SndArg: out += "snd"; break;
      case Dir::SetTarget: out += "target"; break;
    }
  }
  return out;
}

std::string_view stuck_kind_name(StuckKind kind) {
  switch (kind) {
    case StuckKind::UndefinedFunction: return "UndefinedFunction";
    case StuckKind::FutureInStoredBody: return "FutureInStoredBody";
    case StuckKind::NonFunctionApplication: return "NonFunctionApplication";
    case StuckKind::NonBooleanCondition: return "NonBooleanCondition";
    case StuckKind::NonPairProjection: return "NonPairProjection";
    case StuckKind::InvalidSetTarget: return "InvalidSetTarget";
    case StuckKind::AwaitingFuture: return "AwaitingFuture";
    case StuckKind::UnboundVariable: return "UnboundVariable";
  }
  return "?";
}

std::string StuckReason::describe() const { return std::string(stuck_kind_name(kind)) + " " + detail; }

bool NormalSystem::is_restricted(FutureId c) const {
  return std::find(restricted.begin(), restricted.end(), c) != restricted.end();
}

const Run* NormalSystem::component_for(FutureId c) const {
  for (const auto& r : components)
    if (r.future == c) return &r;
  return nullptr;
}

namespace {

// Placeholder for restricted futures in canonical text. Sorts after every free
// future, so unrestricted components (the root among them) come first.
constexpr const char* kMasked = "$~";

std::uint64_t next_index_after(const std::set<FutureId>& ids) {
  std::uint64_t next = 1;
  for (auto c : ids)
    if (!c.is_root()) next = std::max(next, c.index + 1);
  return next;
}

Decomposition stuck(StuckKind kind, std::string detail) {
  return {Decomposition::Kind::Stuck, Rule::Beta, {}, StuckReason{kind, std::move(detail)}};
}

// A value in an eliminator position that is not of the expected shape. Futures
// may still be filled by push; anything else is stuck for good.
Decomposition blocked(const Term& v, StuckKind kind) {
  if (auto f = v.as<Future>()) return stuck(StuckKind::AwaitingFuture, f->id.text());
  if (auto x = v.as<Var>()) return stuck(StuckKind::UnboundVariable, x->name);
  return stuck(kind, pretty(v));
}

Decomposition decompose_at(const Term& t, const Repo& repo, HolePath& path) {
  auto redex = [&](Rule rule) { return Decomposition{Decomposition::Kind::Redex, rule, path, std::nullopt}; };
  auto descend = [&](Dir d, const Term& sub) {
    path.push_back(d);
    return decompose_at(sub, repo, path);
  };
  return visit(
      overloaded{
          [&](const App& a) {
            bool fn_value = is_value(a.fn);
            if (!fn_value) return descend(Dir::AppFn, a.fn);
            if (!a.fn.is<Lam>()) return blocked(a.fn, StuckKind::NonFunctionApplication);
            if (is_value(a.arg)) return redex(Rule::Beta);
            return descend(Dir::AppArg, a.arg);
          },
          [&](const FnName& f) {
            if (repo.contains(f.name)) return redex(Rule::Ret);
            return stuck(StuckKind::UndefinedFunction, f.name);
          },
          [&](const Async&) { return redex(Rule::Async); },
          [&](const If& i) {
            if (auto b = i.cond.as<Bool>()) return redex(b->value ? Rule::CondTrue : Rule::CondFalse);
            if (!is_value(i.cond)) return descend(Dir::IfCond, i.cond);
            return blocked(i.cond, StuckKind::NonBooleanCondition);
          },
          [&](const Fst& f) {
            if (f.arg.is<Pair>() && is_value(f.arg)) return redex(Rule::Fst);
            if (!is_value(f.arg)) return descend(Dir::FstArg, f.arg);
            return blocked(f.arg, StuckKind::NonPairProjection);
          },
          [&](const Snd& s) {
            if (s.arg.is<Pair>() && is_value(s.arg)) return redex(Rule::Snd);
            if (!is_value(s.arg)) return descend(Dir::SndArg, s.arg);
            return blocked(s.arg, StuckKind::NonPairProjection);
          },
          [&](const Set& s) {
            if (auto f = s.target.as<FnName>()) {
              if (auto fs = futures_of(s.body); !fs.empty())
                return stuck(StuckKind::FutureInStoredBody, f->name + " <- " + fs.begin()->text());
              return redex(Rule::Set);
            }
            if (!is_value(s.target)) return descend(Dir::SetTarget, s.target);
            return blocked(s.target, StuckKind::InvalidSetTarget);
          },
          [&](const Take& k) {
            if (repo.contains(k.name)) return redex(Rule::Take);
            return stuck(StuckKind::UndefinedFunction, k.name);
          },
          [&](const Pair& p) {
            if (is_value(t)) return Decomposition{Decomposition::Kind::Value, Rule::Beta, path, std::nullopt};
            return stuck(StuckKind::NonPairProjection, "pair over non-values " + pretty(Term::pair(p.left, p.right)));
          },
          [&](const auto&) { return Decomposition{Decomposition::Kind::Value, Rule::Beta, path, std::nullopt}; },
      },
      t);
}

const Term& subterm_at(const Term& t, const HolePath& path, std::size_t i = 0) {
  if (i == path.size()) return t;
  switch (path[i]) {
    case Dir::AppFn: return subterm_at(t.as<App>()->fn, path, i + 1);
    case Dir::AppArg: return subterm_at(t.as<App>()->arg, path, i + 1);
    case Dir::IfCond: return subterm_at(t.as<If>()->cond, path, i + 1);
    case Dir::FstArg: return subterm_at(t.as<Fst>()->arg, path, i + 1);
    case Dir::SndArg: return subterm_at(t.as<Snd>()->arg, path, i + 1);
    case Dir::SetTarget: return subterm_at(t.as<Set>()->target, path, i + 1);
  }
  return t;
}

Term replace_at(const Term& t, const HolePath& path, const Term& replacement, std::size_t i = 0) {
  if (i == path.size()) return replacement;
  switch (path[i]) {
    case Dir::AppFn: {
      const auto& a = *t.as<App>();
      return Term::app(replace_at(a.fn, path, replacement, i + 1), a.arg);
    }
    case Dir::AppArg: {
      const auto& a = *t.as<App>();
      return Term::app(a.fn, replace_at(a.arg, path, replacement, i + 1));
    }
    case Dir::IfCond: {
      const auto& n = *t.as<If>();
      return Term::if_then_else(replace_at(n.cond, path, replacement, i + 1), n.then_branch, n.else_branch);
    }
    case Dir::FstArg: return Term::fst(replace_at(t.as<Fst>()->arg, path, replacement, i + 1));
    case Dir::SndArg: return Term::snd(replace_at(t.as<Snd>()->arg, path, replacement, i + 1));
    case Dir::SetTarget: {
      const auto& s = *t.as<Set>();
      return Term::set(replace_at(s.target, path, replacement, i + 1), s.body);
    }
  }
  return t;
}

// let rec f = M in M, where occurrences of the function name f inside M now
// refer to the recursive binder.
Term recursive_let(const std::string& name, const Term& body) {
  auto var = fresh_name(name, var_names(body));
  auto rebound = bind_fn_name(body, name, var);
  return Term::app(Term::lam(var, rebound), Term::app(Term::fn_name("fix"), Term::lam(var, rebound)));
}

void canon(std::ostream& os, const Term& t, std::vector<std::string>& binders, const NormalSystem* ctx) {
  visit(overloaded{
            [&](const Var& v) {
              for (std::size_t k = binders.size(); k-- > 0;) {
                if (binders[k] == v.name) {
                  os << '#' << (binders.size() - 1 - k);
                  return;
                }
              }
              os << '?' << v.name;
            },
            [&](const Lam& l) {
              os << "(\\ ";
              binders.push_back(l.binder);
              canon(os, l.body, binders, ctx);
              binders.pop_back();
              os << ')';
            },
            [&](const App& a) {
              os << "(@ ";
              canon(os, a.fn, binders, ctx);
              os << ' ';
              canon(os, a.arg, binders, ctx);
              os << ')';
            },
            [&](const Async& a) {
              os << "(async ";
              canon(os, a.body, binders, ctx);
              os << ')';
            },
            [&](const FnName& f) { os << f.name; },
            [&](const Future& f) { os << (ctx && ctx->is_restricted(f.id) ? kMasked : f.id.text()); },
            [&](const Unit&) { os << "()"; },
            [&](const Bool& b) { os << (b.value ? "T" : "F"); },
            [&](const Pair& p) {
              os << "(, ";
              canon(os, p.left, binders, ctx);
              os << ' ';
              canon(os, p.right, binders, ctx);
              os << ')';
            },
            [&](const If& i) {
              os << "(if ";
              canon(os, i.cond, binders, ctx);
              os << ' ';
              canon(os, i.then_branch, binders, ctx);
              os << ' ';
              canon(os, i.else_branch, binders, ctx);
              os << ')';
            },
            [&](const Fst& f) {
              os << "(fst ";
              canon(os, f.arg, binders, ctx);
              os << ')';
            },
            [&](const Snd& s) {
              os << "(snd ";
              canon(os, s.arg, binders, ctx);
              os << ')';
            },
            [&](const Set& s) {
              os << "(set ";
              canon(os, s.target, binders, ctx);
              os << ' ';
              canon(os, s.body, binders, ctx);
              os << ')';
            },
            [&](const Take& k) { os << "(take " << k.name << ')'; },
        },
        t);
}

struct Bijection {
  std::map<FutureId, FutureId> forward;
  std::map<FutureId, FutureId> backward;
};

class CongruenceMatcher {
 public:
  CongruenceMatcher(const NormalSystem& a, const NormalSystem& b) : a_(a), b_(b) {
    for (const auto& r : a.components) text_a_.push_back(masked_text(r, a));
    for (const auto& r : b.components) text_b_.push_back(masked_text(r, b));
  }

  bool run() {
    if (a_.components.size() != b_.components.size() || a_.restricted.size() != b_.restricted.size())
      return false;
    auto sa = text_a_, sb = text_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    used_.assign(b_.components.size(), false);
    return match(0, Bijection{});
  }

 private:
  bool match_future(FutureId x, FutureId y, Bijection& bij) const {
    bool rx = a_.is_restricted(x), ry = b_.is_restricted(y);
    if (rx != ry) return false;
    if (!rx) return x == y;
    auto fx = bij.forward.find(x);
    auto by = bij.backward.find(y);
    if (fx != bij.forward.end() || by != bij.backward.end())
      return fx != bij.forward.end() && fx->second == y && by != bij.backward.end() && by->second == x;
    bij.forward.emplace(x, y);
    bij.backward.emplace(y, x);
    return true;
  }

  bool match(std::size_t i, const Bijection& bij) {
    if (i == a_.components.size()) return true;
    const Run& ra = a_.components[i];
    for (std::size_t j = 0; j < b_.components.size(); ++j) {
      if (used_[j] || text_a_[i] != text_b_[j]) continue;
      const Run& rb = b_.components[j];
      Bijection extended = bij;
      if (!match_future(ra.future, rb.future, extended)) continue;
      if (!alpha_eq_with(ra.body, rb.body, [&](FutureId x, FutureId y) { return match_future(x, y, extended); }))
        continue;
      used_[j] = true;
      if (match(i + 1, extended)) return true;
      used_[j] = false;
    }
    return false;
  }

  const NormalSystem& a_;
  const NormalSystem& b_;
  std::vector<std::string> text_a_, text_b_;
  std::vector<bool> used_;
};

}  // namespace

Decomposition decompose(const Term& body, const Repo& repo) {
  HolePath path;
  return decompose_at(body, repo, path);
}

std::string canonical_term_text(const Term& t, const NormalSystem* context) {
  std::ostringstream os;
  std::vector<std::string> binders;
  canon(os, t, binders, context);
  return os.str();
}

std::string masked_text(const Run& component, const NormalSystem& context) {
  std::string producer = context.is_restricted(component.future) ? kMasked : component.future.text();
  return producer + " <= " + canonical_term_text(component.body, &context);
}

void sort_components(NormalSystem& s) {
  if (s.components.size() > 1) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(s.components.size());
    for (std::size_t i = 0; i < s.components.size(); ++i) keys.emplace_back(masked_text(s.components[i], s), i);
    std::stable_sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Run> sorted;
    sorted.reserve(keys.size());
    for (const auto& [_, i] : keys) sorted.push_back(s.components[i]);
    s.components = std::move(sorted);
  }
  // Restrictions follow their producers; restrictions without one go last.
  auto producer_index = [&](FutureId c) {
    for (std::size_t i = 0; i < s.components.size(); ++i)
      if (s.components[i].future == c) return i;
    return s.components.size();
  };
  std::stable_sort(s.restricted.begin(), s.restricted.end(),
                   [&](FutureId x, FutureId y) { return producer_index(x) < producer_index(y); });
}

NormalSystem normalize(const System& s) {
  NormalSystem out;
  std::uint64_t next = next_index_after(all_futures(s));
  std::set<FutureId> taken = free_futures(s);
  struct Walker {
    NormalSystem& out;
    std::uint64_t& next;
    std::set<FutureId>& taken;
    void operator()(const System& s) {
      std::visit(overloaded{
                     [&](const Run& r) { out.components.push_back(r); },
                     [&](const Par& p) {
                       (*this)(p.left);
                       (*this)(p.right);
                     },
                     [&](const Res& r) {
                       FutureId c = r.future;
                       System body = r.body;
                       if (taken.contains(c)) {
                         FutureId renamed{next++};
                         body = rename_future(body, c, renamed);
                         c = renamed;
                       }
                       taken.insert(c);
                       out.restricted.push_back(c);
                       (*this)(body);
                     },
                     [](const Nil&) {},
                 },
                 s.node().v);
    }
  };
  Walker{out, next, taken}(s);
  sort_components(out);
  return out;
}

System embed(const NormalSystem& s) {
  System out = System::nil();
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    auto run = System::run(s.components[i].future, s.components[i].body);
    out = i == 0 ? run : System::par(out, run);
  }
  for (auto it = s.restricted.rbegin(); it != s.restricted.rend(); ++it) out = System::res(*it, out);
  return out;
}

Config Config::make(const System& s, Repo repo) {
  Config cfg;
  cfg.system = normalize(s);
  cfg.repo = std::move(repo);
  std::set<FutureId> ids(cfg.system.restricted.begin(), cfg.system.restricted.end());
  for (const auto& r : cfg.system.components) {
    ids.insert(r.future);
    auto fs = futures_of(r.body);
    ids.insert(fs.begin(), fs.end());
  }
  cfg.fresh_counter = next_index_after(ids);
  return cfg;
}

std::vector<Redex> find_redexes(const Config& cfg) {
  std::vector<Redex> out;
  const auto& comps = cfg.system.components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto d = decompose(comps[i].body, cfg.repo);
    if (d.kind == Decomposition::Kind::Redex) out.push_back(Redex{d.rule, i, std::nullopt, std::move(d.path)});
  }
  for (auto c : cfg.system.restricted) {
    const Run* producer = cfg.system.component_for(c);
    if (producer && is_value(producer->body)) out.push_back(Redex{Rule::Push, std::nullopt, c, {}});
  }
  return out;
}

Config apply_redex(const Config& cfg, const Redex& r) {
  auto available = find_redexes(cfg);
  if (std::find(available.begin(), available.end(), r) == available.end())
    throw Error(ErrorKind::StaleRedex, std::string(rule_name(r.rule)) + " at " + path_text(r.path));

  Config out = cfg;
  auto& sys = out.system;

  if (r.rule == Rule::Push) {
    FutureId c = *r.future;
    auto it = std::find_if(sys.components.begin(), sys.components.end(), [&](const Run& x) { return x.future == c; });
    Term value = it->body;
    sys.components.erase(it);
    sys.restricted.erase(std::find(sys.restricted.begin(), sys.restricted.end(), c));
    for (auto& comp : sys.components) comp.body = subst_future(comp.body, c, value);
    sort_components(sys);
    return out;
  }

  Run& comp = sys.components[*r.component];
  const Term& hole = subterm_at(comp.body, r.path);
  Term replacement = hole;
  switch (r.rule) {
    case Rule::Beta: {
      const auto& a = *hole.as<App>();
      const auto& l = *a.fn.as<Lam>();
      replacement = subst_var(l.body, l.binder, a.arg);
      break;
    }
    case Rule::Ret: replacement = *out.repo.lookup(hole.as<FnName>()->name); break;
    case Rule::Async: {
      FutureId c{out.fresh_counter++};
      Term spawned = hole.as<Async>()->body;
      replacement = Term::future(c);
      comp.body = replace_at(comp.body, r.path, replacement);
      sys.components.push_back(Run{c, spawned});
      sys.restricted.push_back(c);
      sort_components(sys);
      return out;
    }
    case Rule::Set: {
      const auto& s = *hole.as<Set>();
      out.repo = out.repo.define(s.target.as<FnName>()->name, s.body);
      replacement = s.target;
      break;
    }
    case Rule::Take: {
      const auto& name = hole.as<Take>()->name;
      replacement = recursive_let(name, *out.repo.lookup(name));
      out.repo = out.repo.undef(name);
      break;
    }
    case Rule::CondTrue: replacement = hole.as<If>()->then_branch; break;
    case Rule::CondFalse: replacement = hole.as<If>()->else_branch; break;
    case Rule::Fst: replacement = hole.as<Fst>()->arg.as<Pair>()->left; break;
    case Rule::Snd: replacement = hole.as<Snd>()->arg.as<Pair>()->right; break;
    case Rule::Push: break;
  }
  comp.body = replace_at(comp.body, r.path, replacement);
  sort_components(sys);
  return out;
}

bool congruent(const NormalSystem& a, const NormalSystem& b) { return CongruenceMatcher(a, b).run(); }

bool congruent(const System& a, const System& b) { return congruent(normalize(a), normalize(b)); }

bool same_config(const Config& a, const Config& b) { return a.repo == b.repo && congruent(a.system, b.system); }

std::vector<std::pair<FutureId, StuckReason>> stuck_components(const Config& cfg) {
  std::vector<std::pair<FutureId, StuckReason>> out;
  for (const auto& comp : cfg.system.components) {
    auto d = decompose(comp.body, cfg.repo);
    if (d.kind == Decomposition::Kind::Stuck) out.emplace_back(comp.future, *d.stuck);
  }
  return out;
}

}  // namespace skc
