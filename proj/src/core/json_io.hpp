#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "clopen.hpp"
#include "decoration.hpp"
#include "engine.hpp"
#include "group.hpp"
#include "instance.hpp"

namespace frc {

using Json = nlohmann::json;

Json ctx_to_json(const GroupCtx& ctx);
GroupCtx ctx_from_json(const Json& j);

Json element_to_json(const GroupElement& e);
GroupElement element_from_json(const Json& j, const GroupCtx& ctx);

Json window_to_json(const Window& w);
// Accepts a JSON list of elements, or the string "std" for the standard
// generators.
Window window_from_json(const Json& j, const GroupCtx& ctx);

// {"ctx": ..., "window": [...], "patterns": ["0101...", ...]}
Json clopen_to_json(const ClopenSet& I);
ClopenSet clopen_from_json(const Json& j);

// {"ctx": ..., "vertices": N, "gen_maps": [[target-or-null, ...], ...], "seed": ...}
Json instance_to_json(const SchreierInstance& S);
SchreierInstance instance_from_json(const Json& j);

// {"gen_maps": ..., "certified": [...]} plus the base graph edge list.
Json decoration_to_json(const Decoration& D);
Decoration decoration_from_json(const Json& j);

Json graph_to_json(const GraphInstance& G);
GraphInstance graph_from_json(const Json& j);

// "u v" per line, 0-indexed, sorted.
std::string graph_to_edge_list(const GraphInstance& G);
GraphInstance graph_from_edge_list(const std::string& text);

} // namespace frc
