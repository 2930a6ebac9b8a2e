#include "skc/pretty.hpp"

#include <sstream>

namespace skc {

namespace {

enum class Prec { Top, AppFn, Atom };

bool mentions_fn_name(const Term& t, const std::string& name) {
  return visit(overloaded{
                   [&](const FnName& f) { return f.name == name; },
                   [&](const Lam& l) { return mentions_fn_name(l.body, name); },
                   [&](const App& a) { return mentions_fn_name(a.fn, name) || mentions_fn_name(a.arg, name); },
                   [&](const Async& a) { return mentions_fn_name(a.body, name); },
                   [&](const Pair& p) { return mentions_fn_name(p.left, name) || mentions_fn_name(p.right, name); },
                   [&](const If& i) {
                     return mentions_fn_name(i.cond, name) || mentions_fn_name(i.then_branch, name) ||
                            mentions_fn_name(i.else_branch, name);
                   },
                   [&](const Fst& f) { return mentions_fn_name(f.arg, name); },
                   [&](const Snd& s) { return mentions_fn_name(s.arg, name); },
                   [&](const Set& s) { return mentions_fn_name(s.target, name) || mentions_fn_name(s.body, name); },
                   [](const auto&) { return false; },
               },
               t);
}

void print(std::ostream& os, const Term& t, Prec prec);

void print_lambda(std::ostream& os, const Lam& l) {
  // A binder that shares its name with a function name in its body would turn
  // that name into a variable on re-parse; print it under a fresh name.
  if (l.binder != "_" && mentions_fn_name(l.body, l.binder)) {
    auto avoid = var_names(l.body);
    avoid.insert(l.binder);
    std::string renamed = l.binder;
    do {
      renamed = fresh_name(renamed + "'", avoid);
    } while (mentions_fn_name(l.body, renamed));
    os << '\\' << renamed << '.';
    print(os, subst_var(l.body, l.binder, Term::var(renamed)), Prec::Top);
    return;
  }
  os << '\\' << l.binder << '.';
  print(os, l.body, Prec::Top);
}

void print(std::ostream& os, const Term& t, Prec prec) {
  auto paren = [&](Prec needed, auto&& body) {
    bool wrap = prec > needed;
    if (wrap) os << '(';
    body();
    if (wrap) os << ')';
  };
  visit(overloaded{
            [&](const Var& v) { os << v.name; },
            [&](const FnName& f) { os << f.name; },
            [&](const Future& f) { os << f.id.text(); },
            [&](const Unit&) { os << "()"; },
            [&](const Bool& b) { os << (b.value ? "True" : "False"); },
            [&](const Pair& p) {
              os << '(';
              print(os, p.left, Prec::Top);
              os << ", ";
              print(os, p.right, Prec::Top);
              os << ')';
            },
            [&](const Lam& l) { paren(Prec::Top, [&] { print_lambda(os, l); }); },
            [&](const If& i) {
              paren(Prec::Top, [&] {
                os << "if ";
                print(os, i.cond, Prec::Top);
                os << " then ";
                print(os, i.then_branch, Prec::Top);
                os << " else ";
                print(os, i.else_branch, Prec::Top);
              });
            },
            [&](const App& a) {
              paren(Prec::AppFn, [&] {
                print(os, a.fn, Prec::AppFn);
                os << ' ';
                print(os, a.arg, Prec::Atom);
              });
            },
            // Prefix forms are atoms to the parser; as arguments they are
            // parenthesized anyway for readability.
            [&](const Async& a) {
              paren(Prec::AppFn, [&] {
                os << "async ";
                print(os, a.body, Prec::Atom);
              });
            },
            [&](const Fst& f) {
              paren(Prec::AppFn, [&] {
                os << "fst ";
                print(os, f.arg, Prec::Atom);
              });
            },
            [&](const Snd& s) {
              paren(Prec::AppFn, [&] {
                os << "snd ";
                print(os, s.arg, Prec::Atom);
              });
            },
            [&](const Set& s) {
              paren(Prec::AppFn, [&] {
                os << "set ";
                print(os, s.target, Prec::Atom);
                os << ' ';
                print(os, s.body, Prec::Atom);
              });
            },
            [&](const Take& k) { paren(Prec::AppFn, [&] { os << "take " << k.name; }); },
        },
        t);
}

void print(std::ostream& os, const System& s, bool atom) {
  std::visit(overloaded{
                 [&](const Run& r) {
                   if (atom) os << '(';
                   os << r.future.text() << " <= ";
                   print(os, r.body, Prec::Top);
                   if (atom) os << ')';
                 },
                 [&](const Par& p) {
                   if (atom) os << '(';
                   print(os, p.left, false);
                   os << " | ";
                   print(os, p.right, p.right.as<Par>() != nullptr);
                   if (atom) os << ')';
                 },
                 [&](const Res& r) {
                   os << "nu " << r.future.text() << '.';
                   print(os, r.body, true);
                 },
                 [&](const Nil&) { os << '0'; },
             },
             s.node().v);
}

void print_repo(std::ostream& os, const Repo& d, const char* sep) {
  bool first = true;
  for (const auto& [name, body] : d.entries()) {
    if (!first) os << sep;
    first = false;
    os << name << " = ";
    print(os, body, Prec::Top);
  }
}

}  // namespace

std::string pretty(const Term& t) {
  std::ostringstream os;
  print(os, t, Prec::Top);
  return os.str();
}

std::string pretty(const System& s) {
  std::ostringstream os;
  print(os, s, false);
  return os.str();
}

std::string pretty(const NormalSystem& s) {
  std::ostringstream os;
  for (auto c : s.restricted) os << "nu " << c.text() << '.';
  bool wrap = !s.restricted.empty() && s.components.size() > 1;
  if (wrap) os << '(';
  if (s.components.empty()) os << '0';
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i) os << " | ";
    bool atom = !s.restricted.empty() && s.components.size() == 1;
    if (atom) os << '(';
    os << s.components[i].future.text() << " <= ";
    print(os, s.components[i].body, Prec::Top);
    if (atom) os << ')';
  }
  if (wrap) os << ')';
  return os.str();
}

std::string pretty(const Repo& d) {
  std::ostringstream os;
  os << '{';
  print_repo(os, d, "; ");
  os << '}';
  return os.str();
}

std::string pretty(const Config& cfg) { return "<" + pretty(cfg.system) + " | " + pretty(cfg.repo) + ">"; }

std::string pretty(const Program& p) {
  std::ostringstream os;
  for (const auto& [name, body] : p.defs) {
    os << "def " << name << " = ";
    print(os, body, Prec::Top);
    os << '\n';
  }
  for (const auto& e : p.events) os << "event " << e.event << " = " << e.handler << '\n';
  os << "main = ";
  print(os, p.main, Prec::Top);
  os << '\n';
  return os.str();
}

}  // namespace skc
