#pragma once

#include <json.hpp>

#include "skc/explorer.hpp"
#include "skc/parser.hpp"
#include "skc/runtime.hpp"

namespace skc {

nlohmann::json to_json(const Term& t);
nlohmann::json to_json(const Program& p);
nlohmann::json to_json(const Repo& d);
nlohmann::json to_json(const Step& s);

/// {"outcome": {...}, "trace": [{index, rule, component, path, config_text}]}
nlohmann::json to_json(const RunResult& r);

/// {states, edges, finals, value_finals, stuck_finals, distinct_final_repos,
///  final_repos, root_values, stuck_reasons, deterministic, truncated}
nlohmann::json summary_json(const StateGraph& g, const OutcomeSummary& s);

}  // namespace skc
