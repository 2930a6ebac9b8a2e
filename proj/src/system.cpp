#include "skc/system.hpp"

#include "skc/error.hpp"

namespace skc {

System System::run(FutureId future, Term body) {
  return System(std::make_shared<const SystemNode>(SystemNode{Run{future, std::move(body)}}));
}
System System::par(System left, System right) {
  return System(std::make_shared<const SystemNode>(SystemNode{Par{std::move(left), std::move(right)}}));
}
System System::res(FutureId future, System body) {
  return System(std::make_shared<const SystemNode>(SystemNode{Res{future, std::move(body)}}));
}
System System::nil() {
  static const System shared(std::make_shared<const SystemNode>(SystemNode{Nil{}}));
  return shared;
}

namespace {

void collect_free(const System& s, std::set<FutureId>& bound, std::set<FutureId>& out) {
  std::visit(overloaded{
                 [&](const Run& r) {
                   if (!bound.contains(r.future)) out.insert(r.future);
                   for (auto c : futures_of(r.body))
                     if (!bound.contains(c)) out.insert(c);
                 },
                 [&](const Par& p) {
                   collect_free(p.left, bound, out);
                   collect_free(p.right, bound, out);
                 },
                 [&](const Res& r) {
                   bool added = bound.insert(r.future).second;
                   collect_free(r.body, bound, out);
                   if (added) bound.erase(r.future);
                 },
                 [](const Nil&) {},
             },
             s.node().v);
}

void collect_all(const System& s, std::set<FutureId>& out) {
  std::visit(overloaded{
                 [&](const Run& r) {
                   out.insert(r.future);
                   auto fs = futures_of(r.body);
                   out.insert(fs.begin(), fs.end());
                 },
                 [&](const Par& p) {
                   collect_all(p.left, out);
                   collect_all(p.right, out);
                 },
                 [&](const Res& r) {
                   out.insert(r.future);
                   collect_all(r.body, out);
                 },
                 [](const Nil&) {},
             },
             s.node().v);
}

}  // namespace

std::set<FutureId> free_futures(const System& s) {
  std::set<FutureId> bound, out;
  collect_free(s, bound, out);
  return out;
}

std::set<FutureId> all_futures(const System& s) {
  std::set<FutureId> out;
  collect_all(s, out);
  return out;
}

System subst_future(const System& s, FutureId c, const Term& v) {
  if (!is_value(v)) throw Error(ErrorKind::NotAValue, "substitution for future " + c.text());
  return std::visit(overloaded{
                        [&](const Run& r) { return System::run(r.future, subst_future(r.body, c, v)); },
                        [&](const Par& p) {
                          return System::par(subst_future(p.left, c, v), subst_future(p.right, c, v));
                        },
                        [&](const Res& r) {
                          if (r.future == c) return s;
                          return System::res(r.future, subst_future(r.body, c, v));
                        },
                        [&](const Nil&) { return s; },
                    },
                    s.node().v);
}

System rename_future(const System& s, FutureId from, FutureId to) {
  auto target = Term::future(to);
  return std::visit(overloaded{
                        [&](const Run& r) {
                          return System::run(r.future == from ? to : r.future,
                                             subst_future(r.body, from, target));
                        },
                        [&](const Par& p) {
                          return System::par(rename_future(p.left, from, to),
                                             rename_future(p.right, from, to));
                        },
                        [&](const Res& r) {
                          if (r.future == from) return s;
                          return System::res(r.future, rename_future(r.body, from, to));
                        },
                        [&](const Nil&) { return s; },
                    },
                    s.node().v);
}

}  // namespace skc
