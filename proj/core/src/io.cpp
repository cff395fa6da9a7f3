#include "fintop/io.hpp"

#include <fstream>
#include <sstream>

#include "fintop/error.hpp"
#include "fintop/group_quotient.hpp"
#include "fintop/quotient.hpp"
#include "json.hpp"

namespace fintop {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

const json& member(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::parse_error, std::string("missing member \"") + name + "\"");
  }
  return j.at(name);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::parse_error, std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw Error(ErrorCode::parse_error, std::string(what) + " out of range");
  return static_cast<int>(v);
}

PointSet as_subset(const json& j, int n) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "a subset must be an array of point indices");
  PointSet s;
  for (const json& p : j) {
    const int x = as_int(p, "point index");
    if (x < 0 || x >= n) {
      throw Error(ErrorCode::point_out_of_range, "point " + std::to_string(x) + " outside 0.." +
                                                     std::to_string(n - 1));
    }
    s.insert(x);
  }
  return s;
}

FiniteSpace space_from(const json& opens, int n) {
  if (n < 1) throw Error(ErrorCode::empty_carrier, "a space needs at least one point");
  if (n > kMaxPoints) throw Error(ErrorCode::carrier_too_large, std::to_string(n) + " points");
  if (!opens.is_array()) throw Error(ErrorCode::parse_error, "\"opens\" must be an array");
  std::vector<PointSet> family;
  for (const json& u : opens) family.push_back(as_subset(u, n));
  return validate_topology(n, family);
}

FiniteGroup group_from(const json& j) {
  if (j.is_string()) return builtin_group(j.get<std::string>());
  const int order = as_int(member(j, "order"), "order");
  const json& rows = member(j, "table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != order) {
    throw Error(ErrorCode::invalid_group, "table must have " + std::to_string(order) + " rows");
  }
  if (order > kMaxPoints) throw Error(ErrorCode::order_too_large, "order " + std::to_string(order));
  std::vector<std::vector<int>> table;
  for (const json& row : rows) {
    if (!row.is_array()) throw Error(ErrorCode::parse_error, "table rows must be arrays");
    std::vector<int> r;
    for (const json& v : row) r.push_back(as_int(v, "table entry"));
    table.push_back(std::move(r));
  }
  return FiniteGroup(std::move(table));
}

ordered_json opens_json(const FiniteSpace& space) {
  ordered_json out = ordered_json::array();
  for (PointSet u : space.opens()) out.push_back(u.to_vector());
  return out;
}

ordered_json group_json(const FiniteGroup& g) {
  ordered_json out;
  out["order"] = g.order();
  out["table"] = g.table();
  return out;
}

ordered_json separation_json(const SeparationProfile& p) {
  ordered_json out;
  out["T0"] = p.t0;
  out["T1"] = p.t1;
  out["R0"] = p.r0;
  out["antidiscrete"] = p.antidiscrete;
  out["discrete"] = p.discrete;
  out["hausdorff"] = p.hausdorff;
  return out;
}

}  // namespace

FiniteSpace space_from_json(std::string_view text) {
  const json j = parse(text);
  return space_from(member(j, "opens"), as_int(member(j, "points"), "points"));
}

std::string space_to_json(const FiniteSpace& space) {
  ordered_json out;
  out["points"] = space.size();
  out["opens"] = opens_json(space);
  return out.dump() + "\n";
}

FiniteGroup group_from_json(std::string_view text) { return group_from(parse(text)); }

std::string group_to_json(const FiniteGroup& group) { return group_json(group).dump() + "\n"; }

GroupWithTopology group_topology_from_json(std::string_view text) {
  const json j = parse(text);
  FiniteGroup group = group_from(member(j, "group"));
  FiniteSpace space = space_from(member(j, "opens"), group.order());
  return GroupWithTopology(std::move(group), std::move(space));
}

std::string group_topology_to_json(const GroupWithTopology& g) {
  ordered_json out;
  out["group"] = group_json(g.group());
  out["opens"] = opens_json(g.space());
  return out.dump() + "\n";
}

std::vector<int> map_table_from_json(std::string_view text) {
  const json j = parse(text);
  const json& table = member(j, "table");
  if (!table.is_array()) throw Error(ErrorCode::parse_error, "\"table\" must be an array");
  std::vector<int> out;
  for (const json& v : table) out.push_back(as_int(v, "table entry"));
  return out;
}

std::string map_table_to_json(std::span<const int> table) {
  ordered_json out;
  out["table"] = std::vector<int>(table.begin(), table.end());
  return out.dump() + "\n";
}

Model model_from_json(std::string_view text) {
  const json j = parse(text);
  if (j.is_object() && j.contains("group")) return group_topology_from_json(text);
  return space_from_json(text);
}

std::string to_dot(const FiniteSpace& space) {
  const int n = space.size();
  std::vector<int> cls(static_cast<std::size_t>(n));
  const std::vector<PointSet> classes = indistinguishability_classes(space);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int x : classes[c]) cls[static_cast<std::size_t>(x)] = static_cast<int>(c);
  }
  std::ostringstream out;
  out << "digraph specialization {\n";
  for (int x = 0; x < n; ++x) out << "  " << x << " [label=\"" << x << "\"];\n";
  for (int x = 0; x < n; ++x) {
    for (int y : space.min_open(x)) {
      if (y == x) continue;
      bool covered = false;
      for (int z : space.min_open(x) & space.point_closure(y)) {
        if (cls[static_cast<std::size_t>(z)] != cls[static_cast<std::size_t>(x)] &&
            cls[static_cast<std::size_t>(z)] != cls[static_cast<std::size_t>(y)]) {
          covered = true;
          break;
        }
      }
      if (!covered) out << "  " << x << " -> " << y << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string classify_json(const Model& model) {
  ordered_json out;
  if (const auto* space = std::get_if<FiniteSpace>(&model)) {
    out["kind"] = "space";
    out["points"] = space->size();
    out["separation"] = separation_json(separation_profile(*space));
    out["homogeneous"] = space->size() <= 7 ? ordered_json(is_homogeneous(*space).homogeneous)
                                            : ordered_json(nullptr);
    out["t0_quotient_points"] = t0_quotient(*space).space.size();
    return out.dump(2) + "\n";
  }
  const auto& g = std::get<GroupWithTopology>(model);
  const ClassProfile p = class_profile(g);
  out["kind"] = "group";
  out["order"] = g.order();
  out["semitopological"] = p.semitopological;
  out["quasitopological"] = p.quasitopological;
  out["paratopological"] = p.paratopological;
  out["topological"] = p.topological;
  out["almost_paratopological_raw"] = p.almost_paratopological_raw;
  out["almost_paratopological"] = p.almost_paratopological();
  out["separation"] = separation_json(separation_profile(g.space()));
  out["closure_e"] = g.identity_closure().to_vector();
  const IdentityCore core = e_core(g);
  out["E_G"] = core.by_closures.to_vector();
  out["E_G_by_squares"] = core.by_squares.to_vector();
  out["H"] = p.semitopological ? ordered_json(t0_quotient_group(g).h.to_vector()) : ordered_json(nullptr);
  const SSetAnalysis s = s_set_analysis(g);
  ordered_json pairs = ordered_json::array();
  ordered_json closure = ordered_json::array();
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      const auto idx = static_cast<std::size_t>(x * g.order() + y);
      if (s.s_set.test(idx)) pairs.push_back({x, y});
      if (s.closure.test(idx)) closure.push_back({x, y});
    }
  }
  out["S_G"] = {{"pairs", pairs},
                {"closure", closure},
                {"closed", s.s_closed},
                {"closure_matches_preimage_of_E_G", s.match}};
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write " + path);
  out << contents;
}

}  // namespace fintop
