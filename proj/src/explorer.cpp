#include "skc/explorer.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "skc/pretty.hpp"

namespace skc {

CanonicalKey canonical_key(const Config& cfg) {
  std::vector<std::string> parts;
  parts.reserve(cfg.system.components.size());
  for (const auto& r : cfg.system.components) parts.push_back(masked_text(r, cfg.system));
  std::sort(parts.begin(), parts.end());

  std::vector<std::string> defs;
  defs.reserve(cfg.repo.size());
  for (const auto& [name, body] : cfg.repo.entries()) defs.push_back(name + "=" + canonical_term_text(body));
  std::sort(defs.begin(), defs.end());

  std::ostringstream os;
  os << "nu*" << cfg.system.restricted.size() << " {";
  for (const auto& p : parts) os << p << " | ";
  os << "} {";
  for (const auto& d : defs) os << d << "; ";
  os << '}';
  return {os.str()};
}

StateGraph explore(const Config& cfg, std::size_t max_states, std::size_t max_depth) {
  StateGraph g;
  std::unordered_map<CanonicalKey, std::vector<std::size_t>, CanonicalKeyHash> index;

  // Returns the id of an existing congruent state, or adds a new one.
  auto intern = [&](const Config& c, std::size_t d) -> std::optional<std::size_t> {
    auto key = canonical_key(c);
    auto& bucket = index[key];
    for (auto id : bucket)
      if (same_config(g.states[id], c)) return id;
    if (g.states.size() >= max_states) {
      g.truncated = true;
      return std::nullopt;
    }
    std::size_t id = g.states.size();
    g.states.push_back(c);
    g.keys.push_back(std::move(key));
    g.depth.push_back(d);
    bucket.push_back(id);
    return id;
  };

  g.initial = *intern(cfg, 0);
  for (std::size_t cursor = 0; cursor < g.states.size(); ++cursor) {
    auto redexes = find_redexes(g.states[cursor]);
    if (redexes.empty()) {
      const Run* root = g.states[cursor].system.component_for(FutureId::root());
      (root && is_value(root->body) ? g.value_finals : g.stuck_finals).push_back(cursor);
      continue;
    }
    if (g.depth[cursor] >= max_depth) {
      g.truncated = true;
      continue;
    }
    for (const auto& r : redexes) {
      // Copy: intern() may grow g.states and invalidate references.
      Config source = g.states[cursor];
      auto target = intern(apply_redex(source, r), g.depth[cursor] + 1);
      if (target) g.edges.push_back({cursor, r, *target});
    }
  }
  return g;
}

OutcomeSummary final_outcomes(const StateGraph& g) {
  OutcomeSummary s;
  s.value_finals = g.value_finals.size();
  s.stuck_finals = g.stuck_finals.size();
  s.truncated = g.truncated;

  auto add_repo = [&](const Repo& d) {
    if (std::none_of(s.final_repos.begin(), s.final_repos.end(), [&](const Repo& r) { return r == d; }))
      s.final_repos.push_back(d);
  };
  for (auto id : g.value_finals) {
    const auto& cfg = g.states[id];
    add_repo(cfg.repo);
    const Term& v = cfg.system.component_for(FutureId::root())->body;
    if (std::none_of(s.root_values.begin(), s.root_values.end(), [&](const Term& t) { return alpha_eq(t, v); }))
      s.root_values.push_back(v);
  }
  for (auto id : g.stuck_finals) {
    const auto& cfg = g.states[id];
    add_repo(cfg.repo);
    for (const auto& [c, reason] : stuck_components(cfg)) {
      auto text = c.text() + ": " + reason.describe();
      if (std::find(s.stuck_reasons.begin(), s.stuck_reasons.end(), text) == s.stuck_reasons.end())
        s.stuck_reasons.push_back(text);
    }
  }
  s.deterministic = s.value_finals == 1 && s.stuck_finals == 0;
  return s;
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

std::string short_digest(const CanonicalKey& key) {
  std::ostringstream os;
  os << std::hex << std::setw(8) << std::setfill('0') << (CanonicalKeyHash{}(key) & 0xffffffffu);
  return os.str();
}

}  // namespace

std::string to_dot(const StateGraph& g) {
  std::ostringstream os;
  os << "digraph skc {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    std::string system = pretty(g.states[i].system);
    if (system.size() > 72) system = system.substr(0, 69) + "...";
    std::string marker;
    std::string attrs;
    if (std::find(g.value_finals.begin(), g.value_finals.end(), i) != g.value_finals.end()) {
      marker = " [final]";
      attrs = ", peripheries=2";
    } else if (std::find(g.stuck_finals.begin(), g.stuck_finals.end(), i) != g.stuck_finals.end()) {
      marker = " [stuck]";
      attrs = ", style=dashed";
    }
    os << "  s" << i << " [label=\"" << dot_escape("s" + std::to_string(i) + " " + short_digest(g.keys[i]) + marker +
                                                   "\n" + system)
       << "\"" << attrs << "];\n";
  }
  for (const auto& e : g.edges) os << "  s" << e.from << " -> s" << e.to << " [label=\"" << rule_name(e.redex.rule) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace skc
