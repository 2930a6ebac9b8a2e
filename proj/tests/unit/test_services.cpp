#include <doctest.h>

#include "helpers.hpp"
#include "skc/error.hpp"
#include "skc/runtime.hpp"
#include "skc/services.hpp"

using namespace skc;
using namespace skc::testing;

TEST_CASE("builtin repository") {
  auto d = builtin_repo();
  CHECK(d.size() == 2);
  REQUIRE(d.lookup("callHandler"));
  CHECK(alpha_eq(*d.lookup("callHandler"), T(R"(\h.\x.(\_.()) (async (h () x)))")));
  REQUIRE(d.lookup("fix"));
  CHECK(alpha_eq(*d.lookup("fix"), T(R"(\f.(\x.f (x x)) (\x.f (x x)))")));
}

TEST_CASE("install_event") {
  auto d = install_event(builtin_repo(), {"e", "h"});
  REQUIRE(d.lookup("e"));
  CHECK(alpha_eq(*d.lookup("e"), T(R"(callHandler (\_.h))")));
  try {
    install_event(d, {"e", "h"});
    FAIL("expected EventCollision");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::EventCollision);
  }
}

TEST_CASE("raising an event spawns the handler and returns unit") {
  auto r = run(boot(parse_program("def h = \\x.x\nevent e = h\nmain = e True")), Strategy::deterministic());
  REQUIRE(r.outcome.kind == Outcome::Kind::Value);
  CHECK(alpha_eq(*r.outcome.value, Term::unit()));
  // The handler's result is pushed into a future nobody reads.
  CHECK(congruent(r.outcome.final_config.system, normalize(S("$root <= ()"))));
  std::size_t asyncs = 0, pushes = 0;
  for (const auto& s : r.trace) {
    asyncs += s.rule() == Rule::Async;
    pushes += s.rule() == Rule::Push;
  }
  CHECK(asyncs == 1);
  CHECK(pushes == 1);
}

TEST_CASE("one spawn per raise") {
  auto r = run(boot(parse_program("def h = \\x.x\nevent e = h\nmain = let _ = e () in let _ = e () in e ()")),
               Strategy::deterministic());
  REQUIRE(r.outcome.kind == Outcome::Kind::Value);
  std::size_t asyncs = 0;
  for (const auto& s : r.trace) asyncs += s.rule() == Rule::Async;
  CHECK(asyncs == 3);
}

TEST_CASE("tailor repository") {
  auto d = tailor_repo();
  CHECK(d.contains("callHandler"));
  CHECK(d.contains("fix"));
  REQUIRE(d.lookup("read_db"));
  CHECK(alpha_eq(*d.lookup("read_db"), T(R"(\x.x ())")));
  REQUIRE(d.lookup("write_db"));
  CHECK(alpha_eq(*d.lookup("write_db"), parse_term(R"(\(x,v).(\_.e_DDB x) (set (x ()) v))")));
  REQUIRE(d.lookup("e_API"));
  CHECK(alpha_eq(*d.lookup("e_API"), T(R"(callHandler (\_.talr-receptionist))")));
  CHECK(d == boot(parse_program(tailor_source())).repo);
}

TEST_CASE("tailor run stores the user") {
  auto r = run(boot(parse_program(tailor_source())), Strategy::deterministic());
  REQUIRE(r.outcome.kind == Outcome::Kind::Value);
  CHECK(r.outcome.stuck.empty());
  auto& d = r.outcome.final_config.repo;
  REQUIRE(d.lookup("kUser"));
  CHECK(alpha_eq(*d.lookup("kUser"), Term::boolean(true)));
  REQUIRE(d.lookup("sns-topic"));
  std::size_t asyncs = 0;
  for (const auto& s : r.trace) asyncs += s.rule() == Rule::Async;
  CHECK(asyncs == 3);
}

TEST_CASE("read_db is a single ret then a beta") {
  Repo d = tailor_repo().define("k", T("True"));
  auto cfg = Config::make(S(R"($root <= read_db (\_.k))"), d);
  auto r = run(cfg, Strategy::deterministic());
  REQUIRE(r.outcome.kind == Outcome::Kind::Value);
  CHECK(alpha_eq(*r.outcome.value, Term::boolean(true)));
  std::vector<Rule> got;
  for (const auto& s : r.trace) got.push_back(s.rule());
  CHECK(got == std::vector<Rule>{Rule::Ret, Rule::Beta, Rule::Beta, Rule::Ret});
}
