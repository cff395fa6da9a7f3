#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fintop/group.hpp"
#include "fintop/group_topology.hpp"
#include "fintop/space.hpp"

namespace fintop {

// Space:               {"points": n, "opens": [[...], ...]}
// Group:               {"order": n, "table": [[...], ...]}
// Group with topology: {"group": <group object or builtin spec>, "opens": [...]}
// Map:                 {"table": [i0, i1, ...]}
// Malformed documents raise parse_error; semantic problems raise the
// validation error of the constructed object.

FiniteSpace space_from_json(std::string_view text);
std::string space_to_json(const FiniteSpace& space);

FiniteGroup group_from_json(std::string_view text);
std::string group_to_json(const FiniteGroup& group);

GroupWithTopology group_topology_from_json(std::string_view text);
std::string group_topology_to_json(const GroupWithTopology& g);

std::vector<int> map_table_from_json(std::string_view text);
std::string map_table_to_json(std::span<const int> table);

using Model = std::variant<FiniteSpace, GroupWithTopology>;

/// Dispatches on the presence of a "group" member.
Model model_from_json(std::string_view text);

/// Specialization order after transitive reduction: edge x -> y iff x <= y,
/// x != y, and no point outside the classes of x and y lies between them.
std::string to_dot(const FiniteSpace& space);

/// JSON summary printed by `classify`.
std::string classify_json(const Model& model);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace fintop
