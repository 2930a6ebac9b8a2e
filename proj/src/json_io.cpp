#include "skc/json_io.hpp"

#include "skc/pretty.hpp"

namespace skc {

using nlohmann::json;

json to_json(const Term& t) {
  return visit(overloaded{
                   [](const Var& v) { return json{{"kind", "var"}, {"name", v.name}}; },
                   [](const Lam& l) { return json{{"kind", "lam"}, {"binder", l.binder}, {"body", to_json(l.body)}}; },
                   [](const App& a) { return json{{"kind", "app"}, {"fn", to_json(a.fn)}, {"arg", to_json(a.arg)}}; },
                   [](const Async& a) { return json{{"kind", "async"}, {"body", to_json(a.body)}}; },
                   [](const FnName& f) { return json{{"kind", "fn"}, {"name", f.name}}; },
                   [](const Future& f) { return json{{"kind", "future"}, {"id", f.id.text()}}; },
                   [](const Unit&) { return json{{"kind", "unit"}}; },
                   [](const Bool& b) { return json{{"kind", "bool"}, {"value", b.value}}; },
                   [](const Pair& p) {
                     return json{{"kind", "pair"}, {"left", to_json(p.left)}, {"right", to_json(p.right)}};
                   },
                   [](const If& i) {
                     return json{{"kind", "if"},
                                 {"cond", to_json(i.cond)},
                                 {"then", to_json(i.then_branch)},
                                 {"else", to_json(i.else_branch)}};
                   },
                   [](const Fst& f) { return json{{"kind", "fst"}, {"arg", to_json(f.arg)}}; },
                   [](const Snd& s) { return json{{"kind", "snd"}, {"arg", to_json(s.arg)}}; },
                   [](const Set& s) {
                     return json{{"kind", "set"}, {"target", to_json(s.target)}, {"body", to_json(s.body)}};
                   },
                   [](const Take& k) { return json{{"kind", "take"}, {"name", k.name}}; },
               },
               t);
}

json to_json(const Program& p) {
  json defs = json::array();
  for (const auto& [name, body] : p.defs)
    defs.push_back({{"name", name}, {"text", pretty(body)}, {"ast", to_json(body)}});
  json events = json::array();
  for (const auto& e : p.events) events.push_back({{"event", e.event}, {"handler", e.handler}});
  return {{"defs", defs}, {"events", events}, {"main", {{"text", pretty(p.main)}, {"ast", to_json(p.main)}}}};
}

json to_json(const Repo& d) {
  json out = json::array();
  for (const auto& [name, body] : d.entries()) out.push_back({{"name", name}, {"body", pretty(body)}});
  return out;
}

json to_json(const Step& s) {
  return {{"index", s.index},
          {"rule", rule_name(s.rule())},
          {"component", s.component},
          {"path", path_text(s.redex.path)},
          {"config_text", s.config_text}};
}

json to_json(const RunResult& r) {
  json stuck = json::array();
  for (const auto& [c, reason] : r.outcome.stuck)
    stuck.push_back({{"component", c.text()}, {"reason", stuck_kind_name(reason.kind)}, {"detail", reason.detail}});
  json outcome{{"kind", outcome_kind_name(r.outcome.kind)},
               {"system", pretty(r.outcome.final_config.system)},
               {"repo", to_json(r.outcome.final_config.repo)},
               {"stuck", stuck},
               {"steps", r.trace.size()}};
  if (r.outcome.value) outcome["value"] = pretty(*r.outcome.value);
  json trace = json::array();
  for (const auto& s : r.trace) trace.push_back(to_json(s));
  return {{"outcome", outcome}, {"trace", trace}};
}

json summary_json(const StateGraph& g, const OutcomeSummary& s) {
  json repos = json::array();
  for (const auto& d : s.final_repos) repos.push_back(to_json(d));
  json values = json::array();
  for (const auto& v : s.root_values) values.push_back(pretty(v));
  return {{"states", g.states.size()},
          {"edges", g.edges.size()},
          {"finals", s.value_finals + s.stuck_finals},
          {"value_finals", s.value_finals},
          {"stuck_finals", s.stuck_finals},
          {"distinct_final_repos", s.final_repos.size()},
          {"final_repos", repos},
          {"root_values", values},
          {"stuck_reasons", s.stuck_reasons},
          {"deterministic", s.deterministic},
          {"truncated", s.truncated}};
}

}  // namespace skc
