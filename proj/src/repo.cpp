#include "skc/repo.hpp"

#include "skc/error.hpp"

namespace skc {

const Term* Repo::find(const std::string& name) const {
  for (const auto& [n, body] : entries_)
    if (n == name) return &body;
  return nullptr;
}

std::optional<Term> Repo::lookup(const std::string& name) const {
  if (auto body = find(name)) return *body;
  return std::nullopt;
}

Repo Repo::define(const std::string& name, Term body) const {
  if (auto fs = futures_of(body); !fs.empty())
    throw Error(ErrorKind::FutureInStoredBody, "body of " + name + " mentions " + fs.begin()->text());
  Repo out = *this;
  for (auto& [n, b] : out.entries_) {
    if (n == name) {
      b = std::move(body);
      return out;
    }
  }
  out.entries_.emplace_back(name, std::move(body));
  return out;
}

Repo Repo::undef(const std::string& name) const {
  Repo out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_)
    if (e.first != name) out.entries_.push_back(e);
  if (out.entries_.size() == entries_.size()) throw Error(ErrorKind::Undefined, name);
  return out;
}

bool operator==(const Repo& a, const Repo& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [name, body] : a.entries_) {
    auto other = b.find(name);
    if (!other || !alpha_eq(body, *other)) return false;
  }
  return true;
}

}  // namespace skc
