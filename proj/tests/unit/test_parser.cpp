#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "skc/error.hpp"
#include "skc/runtime.hpp"

using namespace skc;
using namespace skc::testing;

namespace {

ErrorKind kind_of(auto&& thunk) {
  try {
    thunk();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Syntax;
}

Term L(std::string x, Term body) { return Term::lam(std::move(x), std::move(body)); }
Term V(std::string x) { return Term::var(std::move(x)); }
Term F(std::string f) { return Term::fn_name(std::move(f)); }

}  // namespace

TEST_CASE("let desugars to an applied lambda") {
  auto t = parse_term("let x = () in x");
  CHECK(alpha_eq(t, Term::app(L("x", V("x")), Term::unit())));
  CHECK(pretty(t) == R"((\x.x) ())");
}

TEST_CASE("pattern lambda") {
  auto t = parse_term(R"(\(x,y).x)");
  auto expected = L("z", Term::app(L("x", L("y", V("x"))), Term::fst(V("z")), Term::snd(V("z"))));
  CHECK(alpha_eq(t, expected));
  CHECK(pretty(t) == R"(\z.(\x.\y.x) (fst z) (snd z))");

  // The fresh binder avoids names in the body.
  auto u = parse_term(R"(\(x,y).\z.z x)");
  REQUIRE(u.is<Lam>());
  CHECK(u.as<Lam>()->binder == "z'");
}

TEST_CASE("pair expressions over non-values") {
  auto t = parse_term("(f (), True)");
  auto builder = L("p", L("q", Term::pair(V("p"), V("q"))));
  CHECK(alpha_eq(t, Term::app(builder, Term::app(F("f"), Term::unit()), Term::boolean(true))));

  // Reduces to the same value as an explicit let chain.
  auto run_main = [](const std::string& main) {
    auto result = run(boot(parse_program("def f = \\x.x\nmain = " + main)), Strategy::deterministic());
    REQUIRE(result.outcome.kind == Outcome::Kind::Value);
    return *result.outcome.value;
  };
  auto sugar = run_main("(f (), True)");
  auto manual = run_main("let a = f () in let b = True in (a, b)");
  CHECK(alpha_eq(sugar, manual));
  CHECK(alpha_eq(sugar, Term::pair(Term::unit(), Term::boolean(true))));
}

TEST_CASE("pairs over values stay pairs") {
  auto t = parse_term(R"(((), \x.x))");
  REQUIRE(t.is<Pair>());
  CHECK(is_value(t));
}

TEST_CASE("let rec expands through fix") {
  auto t = parse_term("let rec f = \\x.f x in f ()");
  auto direct = parse_term("let f = fix \\f.\\x.f x in f ()");
  CHECK(alpha_eq(t, direct));
  auto expected = Term::app(L("f", Term::app(V("f"), Term::unit())),
                            Term::app(F("fix"), L("f", L("x", Term::app(V("f"), V("x"))))));
  CHECK(alpha_eq(t, expected));
}

TEST_CASE("callHandler(f) shorthand") {
  CHECK(alpha_eq(parse_term("callHandler(h)"), Term::app(F("callHandler"), L("_", F("h")))));
  CHECK(alpha_eq(parse_term("callHandler h"), Term::app(F("callHandler"), F("h"))));
  CHECK(alpha_eq(parse_term("callHandler (\\_.h)"), parse_term("callHandler(h)")));
}

TEST_CASE("wildcards and scoping") {
  auto t = parse_term(R"(\_.\x.x f)");
  CHECK(alpha_eq(t, L("a", L("x", Term::app(V("x"), F("f"))))));
  // An identifier is a variable only under its binder.
  auto u = parse_term(R"((\x.x) x)");
  CHECK(alpha_eq(u, Term::app(L("x", V("x")), F("x"))));
}

TEST_CASE("precedence") {
  CHECK(alpha_eq(parse_term("f g h"), Term::app(Term::app(F("f"), F("g")), F("h"))));
  CHECK(alpha_eq(parse_term(R"(\x.x \y.y)"), L("x", Term::app(V("x"), L("y", V("y"))))));
  CHECK(alpha_eq(parse_term("async f ()"), Term::app(Term::async(F("f")), Term::unit())));
  CHECK(alpha_eq(parse_term("async (f ())"), Term::async(Term::app(F("f"), Term::unit()))));
  CHECK(alpha_eq(parse_term("set (x ()) v"), Term::set(Term::app(F("x"), Term::unit()), F("v"))));
  CHECK(alpha_eq(parse_term("fst p q"), Term::app(Term::fst(F("p")), F("q"))));
  CHECK(alpha_eq(parse_term("if c then a else b c"),
                 Term::if_then_else(F("c"), F("a"), Term::app(F("b"), F("c")))));
  CHECK(alpha_eq(parse_term("f if True then a else b"),
                 Term::app(F("f"), Term::if_then_else(Term::boolean(true), F("a"), F("b")))));
  CHECK(alpha_eq(parse_term("take f"), Term::take("f")));
}

TEST_CASE("comments and newlines are whitespace") {
  auto t = parse_term("f # comment\n  ()\n");
  CHECK(alpha_eq(t, Term::app(F("f"), Term::unit())));
}

TEST_CASE("identifiers may contain dashes and primes") {
  auto t = parse_term("talr-receptionist x'");
  CHECK(alpha_eq(t, Term::app(F("talr-receptionist"), F("x'"))));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_term("(f\n  ]");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_term("f (");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  CHECK(kind_of([] { parse_term(R"(\x x)"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_term("if a then b"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_term("f )"); }) == ErrorKind::Syntax);
}

TEST_CASE("malformed sugar") {
  CHECK(kind_of([] { parse_term("let x () in x"); }) == ErrorKind::UnknownSugar);
  CHECK(kind_of([] { parse_term("let x = ()"); }) == ErrorKind::UnknownSugar);
  CHECK(kind_of([] { parse_term("let = () in x"); }) == ErrorKind::UnknownSugar);
  CHECK(kind_of([] { parse_term(R"(\(x).x)"); }) == ErrorKind::UnknownSugar);
  CHECK(kind_of([] { parse_term(R"(\(x,y,z).x)"); }) == ErrorKind::UnknownSugar);
  CHECK(kind_of([] { parse_term(R"(\(x,y) x)"); }) == ErrorKind::UnknownSugar);
}

TEST_CASE("programs") {
  auto p = parse_program("def id = \\x.x\nmain = id ()");
  REQUIRE(p.defs.size() == 1);
  CHECK(p.defs[0].first == "id");
  CHECK(alpha_eq(p.main, Term::app(F("id"), Term::unit())));
  CHECK(p.events.empty());

  auto q = parse_program("def h = \\x.x\nevent e = h\nevent e2 = callHandler\nmain = e ()");
  REQUIRE(q.events.size() == 2);
  CHECK(q.events[0].event == "e");
  CHECK(q.events[0].handler == "h");

  CHECK(kind_of([] { parse_program("event e = h\nmain = ()"); }) == ErrorKind::UndefinedHandler);
  CHECK(kind_of([] { parse_program("def f = $c1\nmain = ()"); }) == ErrorKind::FutureInSource);
  CHECK(kind_of([] { parse_program("main = $root"); }) == ErrorKind::FutureInSource);
  CHECK(kind_of([] { parse_program("def f = ()\ndef f = True\nmain = ()"); }) == ErrorKind::DuplicateDef);
  CHECK(kind_of([] { parse_program("def f = ()"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_program("main = ()\ndef f = ()"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_program("fun f = ()\nmain = ()"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_term("$c1"); }) == ErrorKind::FutureInSource);
}

TEST_CASE("systems") {
  auto s = parse_system("nu $c1.($c1 <= () | $root <= $c1) | 0");
  CHECK(pretty(s) == "nu $c1.($c1 <= () | $root <= $c1) | 0");
  CHECK(pretty(System::run(C(1), Term::unit())) == "$c1 <= ()");
  CHECK(pretty(System::par(System::nil(), System::run(C(1), Term::unit()))) == "0 | $c1 <= ()");
  CHECK(kind_of([] { parse_system("$x1 <= ()"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_system("$c1 ()"); }) == ErrorKind::Syntax);
}

TEST_CASE("pretty re-parses to an alpha-equal term") {
  for (const char* src : {R"(\x.x ())", R"((\x.x) (\y.y))", "f (g h) (async (k ()))", "if a then b else c",
                          R"(fst (snd ((), (True, \x.x))))", "set (x ()) v", "take f", R"(\x.\f.f x f)",
                          R"((\f.f) f)", "let rec go = \\n.go n in go ()", R"(\x.(\y.x y) (set f x))"}) {
    CAPTURE(src);
    auto t = parse_term(src);
    CHECK(alpha_eq(parse_term(pretty(t)), t));
  }
}

TEST_CASE("pretty renames binders that would capture a function name") {
  // A lambda whose binder matches a free function name in its body.
  auto t = L("f", Term::app(V("f"), F("f")));
  auto text = pretty(t);
  CHECK(alpha_eq(parse_term(text), t));
}

TEST_CASE("pretty programs round-trip") {
  auto p = parse_program("def f = \\(a,b).a\nevent e = f\nmain = let x = f ((), ()) in x");
  auto q = parse_program(pretty(p));
  REQUIRE(q.defs.size() == 1);
  CHECK(alpha_eq(q.defs[0].second, p.defs[0].second));
  CHECK(alpha_eq(q.main, p.main));
  REQUIRE(q.events.size() == 1);
  CHECK(q.events[0].event == "e");
}
