#include "skc/services.hpp"

#include <algorithm>

#include "skc/error.hpp"

namespace skc {

namespace {

constexpr std::string_view kCallHandler = R"(\h.\x.let _ = async (h () x) in ())";
constexpr std::string_view kFix = R"(\f.(\x.f (x x)) (\x.f (x x)))";

constexpr std::string_view kTailor = R"(# Tailor user registration (API gateway -> DynamoDB -> SNS), runnable excerpt.
#
# Keys and topics are function names wrapped as \_.k; values live in the
# repository. write_db passes the wrapped key to e_DDB instead of the result of
# `set`, because `set` returns the bare name k, which would be expanded to the
# stored value before the validator could read it back.

event e_API = talr-receptionist
event e_DDB = talr-validator
event e_SNS = sns-subscriber

def talr-receptionist = \x.if validate_request x then write_db (get_key x, get_value x) else ()
def talr-validator = \x.let status = read_db x in if check status then push (compose_msg x) else ()

def write_db = \(x,v).(\_.e_DDB x) (set (x ()) v)
def read_db = \x.x ()
def push = \(x,v).e_SNS (set (x ()) v)

# STUB: auxiliaries whose definitions the excerpt leaves out.
def validate_request = \x.True
def get_key = \p.fst p
def get_value = \p.snd p
def check = \x.x
def compose_msg = \x.(\_.sns-topic, (x, True))
def sns-subscriber = \msg.()

main = e_API (\_.kUser, True)
)";

}  // namespace

Repo builtin_repo() {
  Repo d;
  d = d.define("callHandler", parse_term(kCallHandler));
  d = d.define("fix", parse_term(kFix));
  return d;
}

Repo install_event(const Repo& repo, const EventBinding& binding) {
  if (repo.contains(binding.event)) throw Error(ErrorKind::EventCollision, binding.event);
  auto body = Term::app(Term::fn_name("callHandler"), Term::lam("_", Term::fn_name(binding.handler)));
  return repo.define(binding.event, body);
}

std::string_view tailor_source() { return kTailor; }

Repo tailor_repo() {
  auto program = parse_program(kTailor);
  Repo d = builtin_repo();
  for (const auto& [name, body] : program.defs) d = d.define(name, body);
  for (const auto& e : program.events) d = install_event(d, e);
  return d;
}

}  // namespace skc
