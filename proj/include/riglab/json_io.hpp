#pragma once

#include <string>

#include <json.hpp>

#include "riglab/ggraph.hpp"
#include "riglab/multigraph.hpp"
#include "riglab/pfister.hpp"
#include "riglab/reduction.hpp"

namespace riglab {

using nlohmann::json;

json multigraph_to_json(const MultiGraph& g);
MultiGraph multigraph_from_json(const json& j);

json bipartite_to_json(const BipartiteDualGraph& g);
BipartiteDualGraph bipartite_from_json(const json& j);

json ggraph_to_json(const GGraph& gg);
GGraph ggraph_from_json(const json& j, std::size_t group_cap = kDefaultGroupCap);

json reduction_to_json(const ReductionGraph& rg);
ReductionGraph reduction_from_json(const json& j);

json witness_tree_to_json(const pfister::WitnessTree& t);

enum class InstanceKind { ggraph, reduction, bipartite };
InstanceKind detect_instance_kind(const json& j);

/// Parse text as JSON; malformed text raises parse_error.
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

} // namespace riglab
