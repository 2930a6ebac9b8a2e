#include "skc/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "skc/error.hpp"

namespace skc {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"callHandler", "fix"};
  return names;
}

namespace {

enum class Tok { Ident, Future, Backslash, Dot, LParen, RParen, Comma, Equals, Pipe, Produces, Zero, Underscore, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

constexpr std::array kKeywords = {"def", "event", "main", "let", "rec", "in",  "if",  "then", "else",
                                  "async", "fst", "snd", "take", "set", "True", "False", "nu"};

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    auto single = [&](Tok kind) {
      out.push_back({kind, std::string(1, c), l, cl});
      advance(1);
    };
    switch (c) {
      case '\\': single(Tok::Backslash); continue;
      case '.': single(Tok::Dot); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '=': single(Tok::Equals); continue;
      case '|': single(Tok::Pipe); continue;
      default: break;
    }
    if (c == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Produces, "<=", l, cl});
      advance(2);
      continue;
    }
    if (c == '$') {
      std::size_t j = i + 1;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Future, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '0' && (i + 1 >= src.size() || !ident_char(src[i + 1]))) {
      single(Tok::Zero);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      out.push_back({word == "_" ? Tok::Underscore : Tok::Ident, word, l, cl});
      advance(j - i);
      continue;
    }
    throw SyntaxError(ErrorKind::Syntax, std::string("unexpected character '") + c + "'", l, cl);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

FutureId parse_future_token(const Token& t) {
  if (t.text == "$root") return FutureId::root();
  if (t.text.size() > 2 && t.text[1] == 'c' &&
      std::all_of(t.text.begin() + 2, t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return FutureId{std::stoull(t.text.substr(2))};
  throw SyntaxError(ErrorKind::Syntax, "malformed future '" + t.text + "'", t.line, t.column);
}

Term make_pair(Term left, Term right) {
  if (is_value(left) && is_value(right)) return Term::pair(std::move(left), std::move(right));
  auto builder = Term::lam("p", Term::lam("q", Term::pair(Term::var("p"), Term::var("q"))));
  return Term::app(std::move(builder), std::move(left), std::move(right));
}

class Parser {
 public:
  Parser(std::string_view src, ParseOptions options) : toks_(lex(src)), options_(options) {}

  Term whole_term() {
    auto t = term();
    if (!at(Tok::End)) fail("end of input");
    return t;
  }

  System whole_system() {
    auto s = system();
    if (!at(Tok::End)) fail("end of input");
    return s;
  }

  Program program() {
    Program p;
    std::vector<Token> event_tokens;
    bool have_main = false;
    while (!at(Tok::End)) {
      const Token& t = peek();
      if (is_kw("def")) {
        next();
        const Token& name = expect_name("function name after 'def'");
        expect(Tok::Equals, "'='");
        for (const auto& [existing, _] : p.defs)
          if (existing == name.text)
            throw SyntaxError(ErrorKind::DuplicateDef, name.text, name.line, name.column);
        p.defs.emplace_back(name.text, term());
      } else if (is_kw("event")) {
        next();
        const Token& e = expect_name("event name");
        expect(Tok::Equals, "'='");
        const Token& h = expect_name("handler name");
        p.events.push_back({e.text, h.text});
        event_tokens.push_back(h);
      } else if (is_kw("main")) {
        next();
        expect(Tok::Equals, "'='");
        p.main = term();
        have_main = true;
        if (!at(Tok::End)) fail("end of program after main");
      } else {
        throw SyntaxError(ErrorKind::Syntax, "expected 'def', 'event' or 'main', found '" + t.text + "'", t.line,
                          t.column);
      }
    }
    if (!have_main) {
      const Token& end = peek();
      throw SyntaxError(ErrorKind::Syntax, "missing 'main = ...'", end.line, end.column);
    }
    for (std::size_t i = 0; i < p.events.size(); ++i) {
      const auto& h = p.events[i].handler;
      bool defined = std::any_of(p.defs.begin(), p.defs.end(), [&](const auto& d) { return d.first == h; }) ||
                     std::find(builtin_names().begin(), builtin_names().end(), h) != builtin_names().end();
      if (!defined)
        throw SyntaxError(ErrorKind::UndefinedHandler, h, event_tokens[i].line, event_tokens[i].column);
    }
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool is_kw(std::string_view kw) const { return at(Tok::Ident) && peek().text == kw; }

  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::Syntax) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(kind, "expected " + what + ", found " + found, t.line, t.column);
  }

  const Token& expect(Tok kind, const std::string& what, ErrorKind err = ErrorKind::Syntax) {
    if (!at(kind)) fail(what, err);
    return next();
  }

  void expect_kw(std::string_view kw, ErrorKind err = ErrorKind::Syntax) {
    if (!is_kw(kw)) fail("'" + std::string(kw) + "'", err);
    next();
  }

  const Token& expect_name(const std::string& what, ErrorKind err = ErrorKind::Syntax) {
    if (!at(Tok::Ident) || is_keyword(peek().text)) fail(what, err);
    return next();
  }

  std::string binder(ErrorKind err = ErrorKind::Syntax) {
    if (at(Tok::Underscore)) return next().text;
    return expect_name("binder", err).text;
  }

  bool bound(const std::string& name) const {
    return std::find(scope_.rbegin(), scope_.rend(), name) != scope_.rend();
  }

  template <class F>
  Term with_binder(const std::string& name, F&& body) {
    scope_.push_back(name);
    Term t = body();
    scope_.pop_back();
    return t;
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::LParen:
      case Tok::Future: return true;
      case Tok::Ident: {
        const auto& w = peek().text;
        if (!is_keyword(w)) return true;
        return w == "True" || w == "False" || w == "async" || w == "fst" || w == "snd" || w == "take" ||
               w == "set";
      }
      default: return false;
    }
  }

  bool starts_trailing() const { return at(Tok::Backslash) || is_kw("if") || is_kw("let"); }

  Term term() {
    if (at(Tok::Backslash)) return lambda();
    if (is_kw("if")) return conditional();
    if (is_kw("let")) return let();
    return app();
  }

  Term lambda() {
    next();
    if (at(Tok::LParen)) return pattern_lambda();
    auto x = binder();
    expect(Tok::Dot, "'.' after binder");
    return Term::lam(x, with_binder(x, [&] { return term(); }));
  }

  // \(x,y).M  =>  \z.(\x.\y.M) (fst z) (snd z)
  Term pattern_lambda() {
    next();
    auto x = binder(ErrorKind::UnknownSugar);
    expect(Tok::Comma, "',' in pair pattern", ErrorKind::UnknownSugar);
    auto y = binder(ErrorKind::UnknownSugar);
    expect(Tok::RParen, "')' closing pair pattern", ErrorKind::UnknownSugar);
    expect(Tok::Dot, "'.' after pair pattern", ErrorKind::UnknownSugar);
    Term body = with_binder(x, [&] { return with_binder(y, [&] { return term(); }); });
    auto avoid = var_names(body);
    avoid.insert(x);
    avoid.insert(y);
    auto z = fresh_name("z", avoid);
    auto inner = Term::lam(x, Term::lam(y, body));
    return Term::lam(z, Term::app(inner, Term::fst(Term::var(z)), Term::snd(Term::var(z))));
  }

  Term conditional() {
    next();
    auto c = term();
    expect_kw("then");
    auto t = term();
    expect_kw("else");
    auto e = term();
    return Term::if_then_else(c, t, e);
  }

  // let x = M in M'      =>  (\x.M') M
  // let rec x = M in M'  =>  let x = fix \x.M in M'
  Term let() {
    next();
    bool rec = is_kw("rec");
    if (rec) next();
    auto x = binder(ErrorKind::UnknownSugar);
    expect(Tok::Equals, "'=' in let", ErrorKind::UnknownSugar);
    Term bound_term = rec ? Term::app(Term::fn_name("fix"), Term::lam(x, with_binder(x, [&] { return term(); })))
                          : term();
    expect_kw("in", ErrorKind::UnknownSugar);
    auto body = with_binder(x, [&] { return term(); });
    return Term::app(Term::lam(x, body), bound_term);
  }

  Term app() {
    if (!starts_atom()) fail("a term");
    auto [fn, _] = atom();
    bool fn_is_call_handler = fn.is<FnName>() && fn.as<FnName>()->name == "callHandler";
    while (true) {
      if (starts_atom()) {
        auto [arg, parenthesized] = atom();
        // callHandler(f) is shorthand for callHandler \_.f
        if (fn_is_call_handler && parenthesized && arg.is<FnName>()) arg = Term::lam("_", arg);
        fn = Term::app(fn, arg);
        fn_is_call_handler = false;
      } else if (starts_trailing()) {
        fn = Term::app(fn, term());
        break;
      } else {
        break;
      }
    }
    return fn;
  }

  std::pair<Term, bool> atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Future:
        if (!options_.allow_futures)
          throw SyntaxError(ErrorKind::FutureInSource, "future " + t.text + " in source", t.line, t.column);
        return {Term::future(parse_future_token(t)), false};
      case Tok::LParen: {
        if (at(Tok::RParen)) {
          next();
          return {Term::unit(), false};
        }
        auto first = term();
        if (at(Tok::Comma)) {
          next();
          auto second = term();
          expect(Tok::RParen, "')' closing pair");
          return {make_pair(first, second), false};
        }
        expect(Tok::RParen, "')'");
        return {first, true};
      }
      case Tok::Ident: break;
      default: --pos_; fail("a term");
    }
    const std::string& w = t.text;
    if (w == "True") return {Term::boolean(true), false};
    if (w == "False") return {Term::boolean(false), false};
    if (w == "async") return {Term::async(atom().first), false};
    if (w == "fst") return {Term::fst(atom().first), false};
    if (w == "snd") return {Term::snd(atom().first), false};
    if (w == "take") return {Term::take(expect_name("function name after 'take'").text), false};
    if (w == "set") {
      auto target = atom().first;
      auto body = atom().first;
      return {Term::set(target, body), false};
    }
    if (bound(w)) return {Term::var(w), false};
    return {Term::fn_name(w), false};
  }

  System system() {
    auto s = system_atom();
    while (at(Tok::Pipe)) {
      next();
      s = System::par(s, system_atom());
    }
    return s;
  }

  System system_atom() {
    if (at(Tok::Zero)) {
      next();
      return System::nil();
    }
    if (is_kw("nu")) {
      next();
      auto c = parse_future_token(expect(Tok::Future, "future after 'nu'"));
      expect(Tok::Dot, "'.' after restricted future");
      return System::res(c, system_atom());
    }
    if (at(Tok::Future)) {
      auto c = parse_future_token(next());
      expect(Tok::Produces, "'<='");
      return System::run(c, term());
    }
    if (at(Tok::LParen)) {
      next();
      auto s = system();
      expect(Tok::RParen, "')'");
      return s;
    }
    fail("a system");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  std::vector<std::string> scope_;
};

}  // namespace

Term parse_term(std::string_view text, ParseOptions options) { return Parser(text, options).whole_term(); }

System parse_system(std::string_view text) { return Parser(text, {.allow_futures = true}).whole_system(); }

Program parse_program(std::string_view text) { return Parser(text, {}).program(); }

}  // namespace skc
