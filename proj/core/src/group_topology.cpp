#include "fintop/group_topology.hpp"

#include <algorithm>

#include "fintop/error.hpp"

namespace fintop {

GroupWithTopology::GroupWithTopology(FiniteGroup group, FiniteSpace space)
    : group_(std::move(group)), space_(std::move(space)) {
  if (group_.order() != space_.size()) {
    throw Error(ErrorCode::carrier_mismatch, "group of order " + std::to_string(group_.order()) +
                                                 " on a space of " + std::to_string(space_.size()) +
                                                 " points");
  }
}

std::vector<PointSet> GroupWithTopology::identity_neighborhoods() const {
  std::vector<PointSet> out;
  for (PointSet u : space_.opens()) {
    if (u.contains(FiniteGroup::identity)) out.push_back(u);
  }
  return out;
}

bool is_semitopological(const GroupWithTopology& g) noexcept {
  const FiniteGroup& grp = g.group();
  const FiniteSpace& sp = g.space();
  for (int s = 0; s < g.order(); ++s) {
    for (int x = 0; x < g.order(); ++x) {
      const PointSet up = sp.min_open(x);
      if (!grp.left_translate(s, up).subset_of(sp.min_open(grp.mul(s, x)))) return false;
      if (!grp.right_translate(up, s).subset_of(sp.min_open(grp.mul(x, s)))) return false;
    }
  }
  return true;
}

bool inversion_continuous(const GroupWithTopology& g) noexcept {
  const FiniteGroup& grp = g.group();
  const FiniteSpace& sp = g.space();
  for (int x = 0; x < g.order(); ++x) {
    if (!grp.inverse(sp.min_open(x)).subset_of(sp.min_open(grp.inverse(x)))) return false;
  }
  return true;
}

bool multiplication_continuous(const GroupWithTopology& g) noexcept {
  const FiniteGroup& grp = g.group();
  const FiniteSpace& sp = g.space();
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      if (!grp.product(sp.min_open(x), sp.min_open(y)).subset_of(sp.min_open(grp.mul(x, y)))) {
        return false;
      }
    }
  }
  return true;
}

bool almost_paratopological_raw(const GroupWithTopology& g, NeighborhoodPath path) {
  const FiniteGroup& grp = g.group();
  // e is in cl{g} iff g is in min_open(e).
  const PointSet candidates = g.minimal_neighborhood().complement(g.order());
  if (path == NeighborhoodPath::minimal) {
    const PointSet m = g.minimal_neighborhood();
    return !grp.product(m, m).intersects(candidates);
  }
  const std::vector<PointSet> nbhds = g.identity_neighborhoods();
  for (int x : candidates) {
    const bool separated = std::any_of(nbhds.begin(), nbhds.end(), [&](PointSet u) {
      return !grp.product(u, u).contains(x);
    });
    if (!separated) return false;
  }
  return true;
}

ClassProfile class_profile(const GroupWithTopology& g, NeighborhoodPath path) {
  ClassProfile p;
  p.semitopological = is_semitopological(g);
  const bool inversion = inversion_continuous(g);
  p.quasitopological = p.semitopological && inversion;
  p.paratopological = multiplication_continuous(g);
  p.topological = p.paratopological && inversion;
  p.almost_paratopological_raw = almost_paratopological_raw(g, path);
  return p;
}

ClosureFormulaReport closure_formula_check(const GroupWithTopology& g, PointSet m) {
  if (!is_semitopological(g)) {
    throw Error(ErrorCode::not_semitopological, "closure formula needs a semitopological group");
  }
  if (!m.subset_of(g.space().carrier())) {
    throw Error(ErrorCode::point_out_of_range, to_string(m) + " is not within the carrier", {m});
  }
  const FiniteGroup& grp = g.group();
  ClosureFormulaReport r;
  r.closure = g.space().closure(m);
  r.right_formula = grp.carrier();
  r.left_formula = grp.carrier();
  for (PointSet u : g.identity_neighborhoods()) {
    const PointSet inv = grp.inverse(u);
    r.right_formula &= grp.product(m, inv);
    r.left_formula &= grp.product(inv, m);
  }
  r.agree = r.closure == r.right_formula && r.closure == r.left_formula;
  return r;
}

IdentityCore e_core(const GroupWithTopology& g, NeighborhoodPath path) {
  const FiniteGroup& grp = g.group();
  const FiniteSpace& sp = g.space();
  const std::vector<PointSet> nbhds = path == NeighborhoodPath::minimal
                                          ? std::vector<PointSet>{g.minimal_neighborhood()}
                                          : g.identity_neighborhoods();
  IdentityCore core{grp.carrier(), grp.carrier()};
  for (PointSet u : nbhds) {
    const PointSet inv = grp.inverse(u);
    core.by_closures &= sp.closure(inv);
    core.by_squares &= grp.product(inv, inv);
  }
  return core;
}

bool almost_paratopological_iff_core(const GroupWithTopology& g) {
  if (!is_semitopological(g)) {
    throw Error(ErrorCode::not_semitopological, "needs a semitopological group");
  }
  const bool by_definition = almost_paratopological_raw(g, NeighborhoodPath::all_open);
  const bool by_core = e_core(g, NeighborhoodPath::all_open).by_closures == g.identity_closure();
  return by_definition == by_core;
}

ProductPreorder::ProductPreorder(const FiniteSpace& x, const FiniteSpace& y) : x_(x), y_(y) {}

bool ProductPreorder::precedes(int p, int q) const noexcept {
  const int m = y_.size();
  return x_.precedes(p / m, q / m) && y_.precedes(p % m, q % m);
}

WideSet ProductPreorder::closure(const WideSet& s) const {
  const int m = y_.size();
  WideSet out;
  for (int p = 0; p < size(); ++p) {
    if (!s.test(static_cast<std::size_t>(p))) continue;
    for (int a : x_.point_closure(p / m)) {
      for (int b : y_.point_closure(p % m)) out.set(static_cast<std::size_t>(index(a, b)));
    }
  }
  return out;
}

Preorder ProductPreorder::subspace(std::span<const int> points) const {
  std::vector<PointSet> rows(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (precedes(points[i], points[j])) rows[i].insert(static_cast<int>(j));
    }
  }
  return Preorder::from_rows(rows);
}

SSetAnalysis s_set_analysis(const GroupWithTopology& g) {
  const FiniteGroup& grp = g.group();
  const ProductPreorder square(g.space(), g.space());
  const PointSet core = e_core(g).by_closures;
  SSetAnalysis r;
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      const auto p = static_cast<std::size_t>(square.index(x, y));
      const int xy = grp.mul(x, y);
      if (xy == FiniteGroup::identity) r.s_set.set(p);
      if (core.contains(xy)) r.preimage_e.set(p);
    }
  }
  r.closure = square.closure(r.s_set);
  r.match = r.closure == r.preimage_e;
  r.s_closed = r.closure == r.s_set;
  return r;
}

CoreSeparationReport core_separation_equivalence(const GroupWithTopology& g) {
  if (!is_semitopological(g)) {
    throw Error(ErrorCode::not_semitopological, "needs a semitopological group");
  }
  CoreSeparationReport r;
  r.t1_almost_paratopological = separation_profile(g.space()).t1 && almost_paratopological_raw(g);
  r.core_is_identity = e_core(g).by_closures == PointSet::single(FiniteGroup::identity);
  r.s_closed = s_set_analysis(g).s_closed;
  r.all_agree = r.t1_almost_paratopological == r.core_is_identity && r.core_is_identity == r.s_closed;
  return r;
}

SymSpace sym_space(const GroupWithTopology& g) {
  const FiniteGroup& grp = g.group();
  const FiniteSpace& sp = g.space();
  const std::vector<PointSet>& opens = sp.opens();

  std::vector<bool> present(subset_count(g.order()), false);
  for (PointSet u : opens) {
    for (PointSet v : opens) present[(u & grp.inverse(v)).bits()] = true;
  }
  std::vector<PointSet> family;
  for (std::uint32_t bits = 0; bits < present.size(); ++bits) {
    if (present[bits]) family.push_back(PointSet::from_bits(bits));
  }
  bool union_closed = true;
  for (std::size_t i = 0; i < family.size() && union_closed; ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!present[(family[i] | family[j]).bits()]) {
        union_closed = false;
        break;
      }
    }
  }

  // The family is closed under intersection, so the smallest member around x
  // is min_open(x) & min_open(x^{-1})^{-1}; these rows generate the topology.
  std::vector<PointSet> rows(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    rows[static_cast<std::size_t>(x)] = sp.min_open(x) & grp.inverse(sp.min_open(grp.inverse(x)));
  }
  return SymSpace{GroupWithTopology(grp, FiniteSpace(Preorder::from_rows(rows))), std::move(family),
                  union_closed};
}

bool SymPropsReport::passed() const noexcept {
  for (Verdict v : {quasitopological_if_semi, topological_if_para, j_homeomorphism, refines,
                    s_closed_if_t1_ap, hausdorff_quasi_if_t1_ap}) {
    if (v == Verdict::fail) return false;
  }
  return true;
}

SymPropsReport sym_props_check(const GroupWithTopology& g) {
  const FiniteGroup& grp = g.group();
  const ClassProfile profile = class_profile(g);
  const SymSpace sym = sym_space(g);
  const ClassProfile sym_profile = class_profile(sym.sym);

  SymPropsReport r;
  r.quasitopological_if_semi = gated(profile.semitopological, sym_profile.quasitopological);
  r.topological_if_para = gated(profile.paratopological, sym_profile.topological);

  const ProductPreorder square(g.space(), g.space());
  std::vector<int> graph;
  for (int x = 0; x < g.order(); ++x) graph.push_back(square.index(x, grp.inverse(x)));
  r.j_homeomorphism = verdict(square.subspace(graph) == sym.sym.space().specialization());

  const std::vector<PointSet>& opens = g.space().opens();
  r.refines = verdict(std::all_of(opens.begin(), opens.end(),
                                  [&](PointSet u) { return sym.sym.space().is_open(u); }));

  const bool t1_ap = profile.almost_paratopological() && separation_profile(g.space()).t1;
  r.s_closed_if_t1_ap = gated(t1_ap, t1_ap && s_set_analysis(g).s_closed);
  r.hausdorff_quasi_if_t1_ap =
      gated(t1_ap, separation_profile(sym.sym.space()).hausdorff && sym_profile.quasitopological);
  return r;
}

int maltsev(const FiniteGroup& g, int x, int y, int z) noexcept {
  return g.mul(g.mul(x, g.inverse(y)), z);
}

MaltsevReport maltsev_check(const GroupWithTopology& g) {
  const FiniteGroup& grp = g.group();
  const FiniteSpace& sp = g.space();
  const int n = g.order();
  MaltsevReport r;
  r.identities = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (maltsev(grp, x, y, y) != x || maltsev(grp, y, y, x) != x) r.identities = false;
    }
  }
  if (!class_profile(g).quasitopological) return r;

  // With two slots fixed, the remaining slot induces a self-map; it is
  // continuous iff it is monotone for the specialization preorder.
  auto slice_continuous = [&](auto&& apply) {
    for (int a = 0; a < n; ++a) {
      for (int b : sp.min_open(a)) {
        if (!sp.precedes(apply(a), apply(b))) return false;
      }
    }
    return true;
  };
  bool ok = true;
  for (int p = 0; p < n && ok; ++p) {
    for (int q = 0; q < n && ok; ++q) {
      ok = slice_continuous([&](int v) { return maltsev(grp, v, p, q); }) &&
           slice_continuous([&](int v) { return maltsev(grp, p, v, q); }) &&
           slice_continuous([&](int v) { return maltsev(grp, p, q, v); });
    }
  }
  r.separate_continuity = verdict(ok);
  return r;
}

}  // namespace fintop
