#include "fintop/suite.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "fintop/enumeration.hpp"
#include "fintop/error.hpp"
#include "fintop/group_quotient.hpp"
#include "fintop/quotient.hpp"
#include "json.hpp"

namespace fintop {

bool VerificationReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Verdict::fail; });
}

const CheckResult* VerificationReport::find(std::string_view id) const noexcept {
  for (const CheckResult& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> default_suite_groups() { return builtin_universe(kMaxEnumerationOrder); }

namespace {

// Labeled topology counts on 1..5 points.
constexpr std::uint64_t kTopologyCounts[] = {1, 4, 29, 355, 6942};

struct Tally {
  std::uint64_t population = 0;
  std::uint64_t applicable = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> witness;
  std::chrono::nanoseconds elapsed{0};

  void merge(const Tally& o) {
    population += o.population;
    applicable += o.applicable;
    failures += o.failures;
    elapsed += o.elapsed;
    if (o.witness && (!witness || *o.witness < *witness)) witness = o.witness;
  }
};

/// Per-worker accumulator. Merging is a sum plus a minimum over witness
/// keys, so the merged result does not depend on the sharding.
class Ledger {
 public:
  explicit Ledger(const std::string& inject) : inject_(inject) {}

  template <class Body>
  void check(const std::string& id, const std::string& instance, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    std::string witness = instance;
    try {
      v = body();
    } catch (const std::exception& e) {
      v = Verdict::fail;
      witness += " error=" + std::string(e.what());
    }
    Tally& t = tallies_[id];
    t.elapsed += std::chrono::steady_clock::now() - start;
    if (id == inject_) {
      v = Verdict::fail;
      witness = "injected " + witness;
    }
    ++t.population;
    if (v != Verdict::vacuous) ++t.applicable;
    if (v == Verdict::fail) {
      ++t.failures;
      if (!t.witness || witness < *t.witness) t.witness = std::move(witness);
    }
  }

  void count(const std::string& name, std::uint64_t k = 1) { counts_[name] += k; }

  void merge(const Ledger& o) {
    for (const auto& [id, t] : o.tallies_) tallies_[id].merge(t);
    for (const auto& [name, k] : o.counts_) counts_[name] += k;
  }

  const std::map<std::string, Tally>& tallies() const { return tallies_; }
  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }

 private:
  const std::string& inject_;
  std::map<std::string, Tally> tallies_;
  std::map<std::string, std::uint64_t> counts_;
};

using Unit = std::function<void(Ledger&)>;

std::string space_key(const FiniteSpace& s) { return "n=" + std::to_string(s.size()) + " " + s.key(); }

// ---------------------------------------------------------------- spaces

void check_space(Ledger& ledger, const FiniteSpace& s) {
  const std::string key = space_key(s);
  const int n = s.size();
  const SeparationProfile sep = separation_profile(s);

  ledger.check("spaces.valid_topology", key, [&] {
    return verdict(validate_topology(n, s.opens()) == s);
  });
  ledger.check("spaces.preorder_roundtrip", key, [&] {
    const FiniteSpace from_opens = validate_topology(n, s.opens());
    const FiniteSpace rebuilt = space_from_preorder(specialization_preorder(from_opens));
    return verdict(rebuilt == s && rebuilt.opens() == s.opens());
  });
  ledger.check("spaces.de_morgan", key, [&] {
    for (std::uint32_t bits = 0; bits < subset_count(n); ++bits) {
      const PointSet a = PointSet::from_bits(bits);
      if (s.interior(a) != s.closure(a.complement(n)).complement(n)) return Verdict::fail;
    }
    return Verdict::pass;
  });

  const Quotient t0 = t0_quotient(s);
  const SeparationProfile t0_sep = separation_profile(t0.space);
  ledger.check("spaces.r0_iff_t0_quotient_t1", key, [&] { return verdict(sep.r0 == t0_sep.t1); });
  ledger.check("spaces.t0_quotient_is_t0", key, [&] { return verdict(t0_sep.t0); });
  ledger.check("spaces.t0_projection_preserves_topology", key,
               [&] { return verdict(preserves_topology(t0.projection)); });
  ledger.check("spaces.t0_projection_equivalence", key, [&] {
    const PreservationReport r = preservation_equivalence(t0.projection);
    return verdict(r.all_agree && r.preserves);
  });
  ledger.check("spaces.t0_homeomorphism_when_t0", key,
               [&] { return gated(sep.t0, is_homeomorphism(t0.projection)); });
  ledger.check("spaces.t0_quotient_idempotent", key, [&] {
    return verdict(is_homeomorphism(t0_quotient(t0.space).projection));
  });
  if (n <= 7) {
    ledger.check("spaces.homogeneous_implies_r0", key, [&] {
      return gated(is_homogeneous(s).homogeneous, sep.r0);
    });
  }
}

void add_space_units(std::vector<Unit>& units, int max_points) {
  for (int n = 1; n <= max_points; ++n) {
    for (PointSet row : shard_keys(n)) {
      units.emplace_back([n, row](Ledger& ledger) {
        for (const FiniteSpace& s : enumerate_topologies_shard(n, row)) {
          ledger.count("spaces.n" + std::to_string(n));
          check_space(ledger, s);
        }
      });
    }
  }
}

// ---------------------------------------------------------------- maps

struct MapUniverse {
  std::vector<FiniteSpace> spaces;
  // preserving[i]: topology-preserving maps out of spaces[i].
  std::vector<std::vector<SpaceMap>> preserving;
};

template <class Visit>
void for_each_table(int n, int m, Visit&& visit) {
  std::vector<int> table(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(table);
    int i = n - 1;
    while (i >= 0 && table[static_cast<std::size_t>(i)] == m - 1) table[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++table[static_cast<std::size_t>(i)];
  }
}

std::string table_key(std::span<const int> table) {
  std::string out = "[";
  for (std::size_t i = 0; i < table.size(); ++i) out += (i ? "," : "") + std::to_string(table[i]);
  return out + "]";
}

std::shared_ptr<const MapUniverse> build_map_universe(int max_points) {
  auto u = std::make_shared<MapUniverse>();
  for (int n = 1; n <= max_points; ++n) {
    for_each_topology(n, [&](const FiniteSpace& s) { u->spaces.push_back(s); });
  }
  u->preserving.resize(u->spaces.size());
  for (std::size_t i = 0; i < u->spaces.size(); ++i) {
    for (const FiniteSpace& y : u->spaces) {
      if (y.size() > u->spaces[i].size()) continue;
      for_each_table(u->spaces[i].size(), y.size(), [&](const std::vector<int>& table) {
        SpaceMap f(u->spaces[i], y, table);
        if (preserves_topology(f)) u->preserving[i].push_back(std::move(f));
      });
    }
  }
  return u;
}

bool continuous_by_opens(const SpaceMap& f) {
  const std::vector<PointSet>& opens = f.codomain().opens();
  return std::all_of(opens.begin(), opens.end(),
                     [&](PointSet v) { return f.domain().is_open(f.preimage(v)); });
}

void check_maps_from(Ledger& ledger, const MapUniverse& u, std::size_t i) {
  const FiniteSpace& x = u.spaces[i];
  for (const FiniteSpace& y : u.spaces) {
    for_each_table(x.size(), y.size(), [&](const std::vector<int>& table) {
      const SpaceMap f(x, y, table);
      const std::string key = "X=" + space_key(x) + " Y=" + space_key(y) + " f=" + table_key(table);
      const MapProfile profile = map_profile(f);
      ledger.check("maps.continuity_is_monotonicity", key,
                   [&] { return verdict(profile.continuous == continuous_by_opens(f)); });
      if (!profile.surjective) return;
      ledger.count("maps.surjective");
      ledger.check("maps.preservation_equivalence", key, [&] { return verdict(preservation_equivalence(f).all_agree); });
      const bool preserves = preserves_topology(f);
      ledger.check("maps.preserving_implies_profile", key,
                   [&] { return gated(preserves, profile.all()); });
    });
  }
  for (const SpaceMap& f : u.preserving[i]) {
    const auto j = static_cast<std::size_t>(
        std::find(u.spaces.begin(), u.spaces.end(), f.codomain()) - u.spaces.begin());
    for (const SpaceMap& g : u.preserving[j]) {
      const std::string key = "X=" + space_key(x) + " f=" + table_key(f.table()) + " g=" + table_key(g.table()) +
                              " Z=" + space_key(g.codomain());
      ledger.check("maps.composition_preserves", key,
                   [&] { return verdict(preserves_topology(compose(g, f))); });
    }
  }
}

void add_map_units(std::vector<Unit>& units, int max_points) {
  const auto universe = build_map_universe(std::min(max_points, 3));
  for (std::size_t i = 0; i < universe->spaces.size(); ++i) {
    units.emplace_back([universe, i](Ledger& ledger) { check_maps_from(ledger, *universe, i); });
  }
}

// ---------------------------------------------------------------- groups

void check_group_topology(Ledger& ledger, const std::string& name, const GroupTopology& entry,
                          const std::vector<GroupTopology>& all) {
  const GroupWithTopology& g = entry.value;
  const ClassProfile& p = entry.profile;
  const std::string key = "group=" + name + " topology=" + g.space().key();
  const SeparationProfile sep = separation_profile(g.space());

  ledger.check("groups.class_hierarchy", key, [&] {
    return verdict((!p.topological || (p.paratopological && p.quasitopological)) &&
                   (!p.quasitopological || p.semitopological) &&
                   (!p.paratopological || p.semitopological));
  });
  ledger.check("groups.neighborhood_paths_agree", key, [&] {
    const IdentityCore a = e_core(g, NeighborhoodPath::minimal);
    const IdentityCore b = e_core(g, NeighborhoodPath::all_open);
    return verdict(class_profile(g, NeighborhoodPath::all_open) == p && a.by_closures == b.by_closures &&
                   a.by_squares == b.by_squares);
  });

  const IdentityCore core = e_core(g);
  ledger.check("groups.e_core_agree", key, [&] { return verdict(core.agree()); });
  ledger.check("groups.identity_closure_in_core", key,
               [&] { return verdict(g.identity_closure().subset_of(core.by_closures)); });
  ledger.check("groups.almost_paratopological_iff_core", key,
               [&] { return verdict(almost_paratopological_iff_core(g)); });
  ledger.check("groups.s_closure_matches_preimage", key,
               [&] { return verdict(s_set_analysis(g).match); });
  ledger.check("groups.core_separation_agreement", key, [&] { return verdict(core_separation_equivalence(g).all_agree); });

  const SymPropsReport sym = sym_props_check(g);
  ledger.check("groups.sym.quasitopological_if_semi", key, [&] { return sym.quasitopological_if_semi; });
  ledger.check("groups.sym.topological_if_para", key, [&] { return sym.topological_if_para; });
  ledger.check("groups.sym.j_homeomorphism", key, [&] { return sym.j_homeomorphism; });
  ledger.check("groups.sym.refines", key, [&] { return sym.refines; });
  ledger.check("groups.sym.s_closed_if_t1_ap", key, [&] { return sym.s_closed_if_t1_ap; });
  ledger.check("groups.sym.hausdorff_quasi_if_t1_ap", key, [&] { return sym.hausdorff_quasi_if_t1_ap; });
  ledger.count(sym_space(g).family_already_topology ? "groups.sym_family.union_closed"
                                                    : "groups.sym_family.not_union_closed");

  const T0QuotientGroup t0 = t0_quotient_group(g);
  ledger.check("groups.t0_quotient_group", key, [&] { return verdict(t0.report.passed()); });
  ledger.check("groups.closed_identity_subgroup", key, [&] { return verdict(closed_subgroup_check(g).passed()); });
  ledger.check("groups.quotient_homomorphism", key, [&] {
    return verdict(t0.projection && quotient_homomorphism_check(*t0.projection).passed());
  });
  ledger.check("groups.class_preservation", key, [&] {
    return verdict(t0.projection && class_preservation_check(*t0.projection).passed());
  });
  ledger.check("groups.identity_quotient_homomorphism", key, [&] {
    return verdict(quotient_homomorphism_check(GroupHomomorphism::identity(g)).passed());
  });

  ledger.check("groups.compact_ap_is_topological", key,
               [&] { return gated(p.almost_paratopological(), p.topological); });
  ledger.check("groups.compact_para_is_topological", key,
               [&] { return gated(p.paratopological, p.topological); });
  ledger.check("groups.ellis_hausdorff_is_topological", key,
               [&] { return gated(sep.hausdorff, p.topological); });

  const MaltsevReport maltsev = maltsev_check(g);
  ledger.check("groups.maltsev_identities", key, [&] { return verdict(maltsev.identities); });
  ledger.check("groups.maltsev_separate_continuity", key, [&] { return maltsev.separate_continuity; });

  if (g.order() <= 6) {
    for (std::uint32_t bits = 0; bits < subset_count(g.order()); ++bits) {
      const PointSet m = PointSet::from_bits(bits);
      ledger.check("groups.closure_formula", key + " M=" + to_string(m),
                   [&] { return verdict(closure_formula_check(g, m).agree); });
    }
  }

  ledger.check("groups.implies_almost_para.paratopological", key,
               [&] { return gated(p.paratopological, p.almost_paratopological()); });
  ledger.check("groups.implies_almost_para.hausdorff_quasitopological", key,
               [&] { return gated(sep.hausdorff && p.quasitopological, p.almost_paratopological()); });
  for (PointSet s : subgroups(g.group())) {
    ledger.check("groups.implies_almost_para.subgroup", key + " S=" + to_string(s), [&] {
      if (!p.almost_paratopological()) return Verdict::vacuous;
      return verdict(class_profile(subgroup_with_subspace(g, s)).almost_paratopological());
    });
  }
  // A continuous bijective homomorphism onto a T1 almost paratopological
  // group; on one carrier the identity table is continuous exactly when the
  // codomain topology is coarser.
  for (const GroupTopology& other : all) {
    const GroupWithTopology& h = other.value;
    ledger.check("groups.implies_almost_para.continuous_isomorphism", key + " onto=" + h.space().key(), [&] {
      bool continuous = true;
      for (int x = 0; x < g.order(); ++x) {
        if (!g.space().min_open(x).subset_of(h.space().min_open(x))) continuous = false;
      }
      const bool target = other.profile.almost_paratopological() && separation_profile(h.space()).t1;
      return gated(continuous && target, p.almost_paratopological());
    });
  }
}

void check_group(Ledger& ledger, const std::string& name) {
  const FiniteGroup group = builtin_group(name);
  const std::vector<GroupTopology> semi = enumerate_group_topologies(group);
  ledger.count("groups." + name + ".semitopological", semi.size());
  for (const GroupTopology& t : semi) {
    if (t.profile.quasitopological) ledger.count("groups." + name + ".quasitopological");
    if (t.profile.paratopological) ledger.count("groups." + name + ".paratopological");
    if (t.profile.topological) ledger.count("groups." + name + ".topological");
    if (t.profile.almost_paratopological()) ledger.count("groups." + name + ".almost_paratopological");
    check_group_topology(ledger, name, t, semi);
  }
  ledger.check("groups.filter_containment", "group=" + name, [&] {
    for (const GroupTopology& t : enumerate_group_topologies(group, {GroupClass::topological})) {
      const bool found = std::any_of(semi.begin(), semi.end(), [&](const GroupTopology& u) {
        return u.value.space() == t.value.space();
      });
      if (!found) return Verdict::fail;
    }
    return Verdict::pass;
  });

  // Statements that hold for an arbitrary topology, swept over every
  // topology on the small carriers.
  if (group.order() <= kMaxEnumerationPoints) {
    for (const GroupTopology& t : enumerate_group_topologies(group, ClassFilter{})) {
      const GroupWithTopology& g = t.value;
      const std::string key = "group=" + name + " topology=" + g.space().key();
      ledger.check("groups.any.j_homeomorphism", key, [&] { return sym_props_check(g).j_homeomorphism; });
      ledger.check("groups.any.sym_refines", key, [&] { return sym_props_check(g).refines; });
      ledger.check("groups.any.neighborhood_paths_agree", key, [&] {
        const IdentityCore a = e_core(g, NeighborhoodPath::minimal);
        const IdentityCore b = e_core(g, NeighborhoodPath::all_open);
        return verdict(almost_paratopological_raw(g, NeighborhoodPath::minimal) ==
                           almost_paratopological_raw(g, NeighborhoodPath::all_open) &&
                       a.by_closures == b.by_closures && a.by_squares == b.by_squares);
      });
      ledger.check("groups.any.maltsev_identities", key, [&] { return verdict(maltsev_check(g).identities); });
    }
  }
}

void check_products(Ledger& ledger, const std::string& a, const std::string& b) {
  const ClassFilter ap{GroupClass::almost_paratopological};
  const FiniteGroup ga = builtin_group(a);
  const FiniteGroup gb = builtin_group(b);
  const std::vector<GroupTopology> lhs = enumerate_group_topologies(ga, ap);
  const std::vector<GroupTopology> rhs = enumerate_group_topologies(gb, ap);
  for (const GroupTopology& x : lhs) {
    for (const GroupTopology& y : rhs) {
      const std::string key = "groups=" + a + "x" + b + " topologies=" + x.value.space().key() + "," +
                              y.value.space().key();
      ledger.check("groups.implies_almost_para.product", key, [&] {
        return verdict(class_profile(product_group(x.value, y.value)).almost_paratopological());
      });
    }
  }
}

void add_group_units(std::vector<Unit>& units, const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    units.emplace_back([name](Ledger& ledger) { check_group(ledger, name); });
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i; j < names.size(); ++j) {
      if (builtin_group(names[i]).order() * builtin_group(names[j]).order() > kMaxPoints) continue;
      units.emplace_back([a = names[i], b = names[j]](Ledger& ledger) { check_products(ledger, a, b); });
    }
  }
}

Ledger run_units(const std::vector<Unit>& units, int jobs, const std::string& inject) {
  Ledger merged(inject);
  if (jobs <= 1 || units.size() <= 1) {
    for (const Unit& unit : units) unit(merged);
    return merged;
  }
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(jobs), units.size()));
  std::vector<Ledger> partial(workers, Ledger(inject));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < units.size(); i += workers) units[i](partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const Ledger& l : partial) merged.merge(l);
  return merged;
}

}  // namespace

VerificationReport run_suite(std::string_view suite_id, const SuiteBounds& bounds) {
  const bool spaces = suite_id == "spaces" || suite_id == "all";
  const bool maps = suite_id == "maps" || suite_id == "all";
  const bool groups = suite_id == "groups" || suite_id == "all";
  if (!spaces && !maps && !groups) {
    throw Error(ErrorCode::unknown_suite, "'" + std::string(suite_id) + "'; expected spaces, maps, groups or all");
  }
  if (bounds.max_points < 1 || bounds.max_points > kMaxEnumerationPoints) {
    throw Error(ErrorCode::bounds_too_large, "max points must be within 1.." +
                                                 std::to_string(kMaxEnumerationPoints));
  }
  if (bounds.jobs < 1) throw Error(ErrorCode::bounds_too_large, "jobs must be positive");
  const std::vector<std::string> names = bounds.groups.empty() ? default_suite_groups() : bounds.groups;
  if (groups) {
    for (const std::string& name : names) {
      if (builtin_group(name).order() > kMaxEnumerationOrder) {
        throw Error(ErrorCode::bounds_too_large, name + " exceeds order " +
                                                     std::to_string(kMaxEnumerationOrder));
      }
    }
  }

  std::vector<Unit> units;
  if (spaces) add_space_units(units, bounds.max_points);
  if (maps) add_map_units(units, bounds.max_points);
  if (groups) add_group_units(units, names);
  const Ledger ledger = run_units(units, bounds.jobs, bounds.inject_failure);

  VerificationReport report;
  report.suite_id = std::string(suite_id);
  report.max_points = bounds.max_points;
  if (groups) report.groups = names;
  report.counts = ledger.counts();
  for (const auto& [id, t] : ledger.tallies()) {
    CheckResult c;
    c.id = id;
    c.population = t.population;
    c.applicable = t.applicable;
    c.failures = t.failures;
    c.witness = t.witness;
    c.elapsed = t.elapsed;
    c.status = t.failures > 0 ? Verdict::fail : t.applicable > 0 ? Verdict::pass : Verdict::vacuous;
    report.checks.push_back(std::move(c));
  }
  if (spaces) {
    for (int n = 1; n <= bounds.max_points; ++n) {
      CheckResult c;
      c.id = "spaces.count.n" + std::to_string(n);
      const auto it = report.counts.find("spaces.n" + std::to_string(n));
      c.population = it == report.counts.end() ? 0 : it->second;
      c.applicable = 1;
      bool ok = c.population == kTopologyCounts[n - 1];
      if (c.id == bounds.inject_failure) ok = false;
      c.status = verdict(ok);
      if (!ok) {
        c.failures = 1;
        c.witness = "n=" + std::to_string(n) + " emitted=" + std::to_string(c.population) +
                    " expected=" + std::to_string(kTopologyCounts[n - 1]);
      }
      report.checks.push_back(std::move(c));
    }
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

std::string report_to_json(const VerificationReport& report, bool include_timings) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite_id;
  j["max_points"] = report.max_points;
  j["groups"] = report.groups;
  j["passed"] = report.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["id"] = c.id;
    entry["status"] = std::string(to_string(c.status));
    entry["population"] = c.population;
    entry["applicable"] = c.applicable;
    entry["failures"] = c.failures;
    entry["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json(nullptr);
    if (include_timings) {
      entry["elapsed_ms"] = std::chrono::duration<double, std::milli>(c.elapsed).count();
    }
    j["checks"].push_back(std::move(entry));
  }
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [name, k] : report.counts) j["counts"][name] = k;
  return j.dump(2) + "\n";
}

}  // namespace fintop
