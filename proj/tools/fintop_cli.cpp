// fintop: enumerate, classify and verify finite spaces and groups with
// topology.
//
// Exit codes: 0 success, 1 a check failed (or a mine target that must be
// empty had witnesses), 2 invalid input or arguments.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/error.hpp"
#include "fintop/io.hpp"
#include "fintop/suite.hpp"
#include "json.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("FINTOP_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

int run_enumerate_spaces(int points, bool up_to_iso, const std::string& dump) {
  std::vector<fintop::FiniteSpace> spaces = fintop::enumerate_topologies(points);
  if (up_to_iso) spaces = fintop::canonical_up_to_homeomorphism(spaces);
  if (!dump.empty()) {
    std::string lines;
    for (const auto& s : spaces) lines += s.key() + "\n";
    fintop::write_file(dump, lines);
  }
  nlohmann::ordered_json out;
  out["points"] = points;
  out["up_to_homeomorphism"] = up_to_iso;
  out["count"] = spaces.size();
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_enumerate_groups(const std::string& spec, const std::string& filter, const std::string& dump) {
  const fintop::FiniteGroup group = fintop::builtin_group(spec);
  const auto topologies = fintop::enumerate_group_topologies(group, fintop::ClassFilter::parse(filter));
  nlohmann::ordered_json out;
  out["group"] = spec;
  out["order"] = group.order();
  out["filter"] = filter;
  out["count"] = topologies.size();
  out["topologies"] = nlohmann::ordered_json::array();
  std::string lines;
  for (const auto& t : topologies) {
    nlohmann::ordered_json entry;
    entry["key"] = t.value.space().key();
    entry["opens"] = nlohmann::ordered_json::array();
    for (fintop::PointSet u : t.value.space().opens()) entry["opens"].push_back(u.to_vector());
    entry["semitopological"] = t.profile.semitopological;
    entry["quasitopological"] = t.profile.quasitopological;
    entry["paratopological"] = t.profile.paratopological;
    entry["topological"] = t.profile.topological;
    entry["almost_paratopological"] = t.profile.almost_paratopological();
    out["topologies"].push_back(std::move(entry));
    lines += t.value.space().key() + "\n";
  }
  if (!dump.empty()) fintop::write_file(dump, lines);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& suite, const fintop::SuiteBounds& bounds, const std::string& report_path,
               bool timings) {
  const fintop::VerificationReport report = fintop::run_suite(suite, bounds);
  const std::string json = fintop::report_to_json(report, timings);
  if (report_path.empty()) {
    std::cout << json;
  } else {
    fintop::write_file(report_path, json);
    std::size_t failed = 0;
    for (const auto& c : report.checks) failed += c.status == fintop::Verdict::fail;
    std::cout << "suite " << suite << ": " << report.checks.size() << " checks, " << failed
              << " failed; report written to " << report_path << "\n";
  }
  for (const auto& c : report.checks) {
    if (c.status == fintop::Verdict::fail) {
      std::cerr << "FAIL " << c.id << " witness: " << c.witness.value_or("?") << "\n";
    }
  }
  return report.passed() ? 0 : kExitFailed;
}

int run_mine(const std::string& target, const fintop::MineBounds& bounds) {
  const fintop::MineResult r = fintop::mine(target, bounds);
  nlohmann::ordered_json out;
  out["target"] = r.target;
  out["universe"] = r.universe;
  out["population"] = r.population;
  out["expect_none"] = r.expect_none;
  out["certificate"] = r.certificate();
  out["witnesses"] = r.witnesses;
  std::cout << out.dump(2) << "\n";
  return r.expect_none && !r.none() ? kExitFailed : 0;
}

int run_inspect(const std::string& input, const std::string& dot) {
  const fintop::Model model = fintop::model_from_json(fintop::read_file(input));
  const fintop::FiniteSpace& space = std::holds_alternative<fintop::FiniteSpace>(model)
                                         ? std::get<fintop::FiniteSpace>(model)
                                         : std::get<fintop::GroupWithTopology>(model).space();
  const std::string text = fintop::to_dot(space);
  if (dot.empty() || dot == "-") {
    std::cout << text;
  } else {
    fintop::write_file(dot, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topological spaces and groups with topology"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate topologies");
  enumerate->require_subcommand(1);

  int points = 3;
  bool up_to_iso = false;
  std::string dump;
  auto* enum_spaces = enumerate->add_subcommand("spaces", "Every topology on N labeled points");
  enum_spaces->add_option("--points", points, "Number of points (1..5)")->required();
  enum_spaces->add_flag("--up-to-iso", up_to_iso, "Keep one representative per homeomorphism class");
  enum_spaces->add_option("--dump", dump, "Write one canonical key per line");

  std::string group_spec;
  std::string filter = "semitopological";
  auto* enum_groups = enumerate->add_subcommand("group-topologies", "Topologies on a built-in group");
  enum_groups->add_option("--group", group_spec, "Group spec, e.g. cyclic4 or dihedral(4)")->required();
  enum_groups->add_option("--filter", filter, "Comma-separated class names; 'any' for all topologies");
  enum_groups->add_option("--dump", dump, "Write one canonical key per line");

  std::string input;
  auto* classify = app.add_subcommand("classify", "Print separation or class profile as JSON");
  classify->add_option("--input", input, "Space or group-with-topology JSON")->required();

  std::string suite = "all";
  int max_points = 4;
  std::string groups;
  int jobs = default_jobs();
  std::string report_path;
  std::string inject;
  bool no_timings = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "spaces, maps, groups or all");
  verify->add_option("--max-points", max_points, "Largest enumerated space (1..5)");
  verify->add_option("--groups", groups, "Comma-separated built-in groups (default: all fixtures)");
  verify->add_option("--jobs", jobs, "Worker threads (default $FINTOP_JOBS or 1)");
  verify->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  verify->add_flag("--no-timings", no_timings, "Omit elapsed times from the report");
  verify->add_option("--inject-failure", inject, "Force the named check to fail (exit-code testing)");

  std::string target;
  int max_order = fintop::kMaxEnumerationOrder;
  int mine_points = fintop::kMaxEnumerationPoints;
  auto* mine = app.add_subcommand("mine", "Search the enumerated universe for witnesses");
  mine->add_option("--target", target, "Target name")->required();
  mine->add_option("--max-order", max_order, "Largest group order for group targets (<= 8)");
  mine->add_option("--max-points", mine_points, "Largest space for space targets (<= 5)");

  std::string dot;
  auto* inspect = app.add_subcommand("inspect", "Export the specialization order as DOT");
  inspect->add_option("--input", input, "Space or group-with-topology JSON")->required();
  inspect->add_option("--dot", dot, "Output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*enum_spaces) return run_enumerate_spaces(points, up_to_iso, dump);
    if (*enum_groups) return run_enumerate_groups(group_spec, filter, dump);
    if (*classify) {
      std::cout << fintop::classify_json(fintop::model_from_json(fintop::read_file(input)));
      return 0;
    }
    if (*verify) {
      fintop::SuiteBounds bounds;
      bounds.max_points = max_points;
      bounds.groups = split_csv(groups);
      bounds.jobs = jobs;
      bounds.inject_failure = inject;
      return run_verify(suite, bounds, report_path, !no_timings);
    }
    if (*mine) return run_mine(target, fintop::MineBounds{max_order, mine_points});
    if (*inspect) return run_inspect(input, dot);
  } catch (const fintop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
