#include "fintop/group_quotient.hpp"

#include <numeric>

#include "fintop/error.hpp"
#include "fintop/quotient.hpp"

namespace fintop {

GroupHomomorphism::GroupHomomorphism(GroupWithTopology domain, GroupWithTopology codomain,
                                     std::vector<int> table)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      map_(domain_.space(), codomain_.space(), std::move(table)) {
  const FiniteGroup& g = domain_.group();
  const FiniteGroup& h = codomain_.group();
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      if (map_(g.mul(x, y)) != h.mul(map_(x), map_(y))) {
        throw Error(ErrorCode::not_a_homomorphism,
                    "f(" + std::to_string(x) + "*" + std::to_string(y) + ") differs from f(" +
                        std::to_string(x) + ")*f(" + std::to_string(y) + ")");
      }
    }
  }
}

GroupHomomorphism GroupHomomorphism::identity(const GroupWithTopology& g) {
  std::vector<int> table(static_cast<std::size_t>(g.order()));
  std::iota(table.begin(), table.end(), 0);
  return GroupHomomorphism(g, g, std::move(table));
}

namespace {

bool antidiscrete_subspace(const FiniteSpace& space, PointSet s) {
  return separation_profile(subspace(space, s)).antidiscrete;
}

void require_semitopological(const GroupWithTopology& g) {
  if (!is_semitopological(g)) {
    throw Error(ErrorCode::not_semitopological, "needs a semitopological group");
  }
}

}  // namespace

T0QuotientGroup t0_quotient_group(const GroupWithTopology& g) {
  require_semitopological(g);
  const FiniteGroup& grp = g.group();
  T0QuotientGroup out;
  const PointSet cl_e = g.identity_closure();
  out.h = cl_e & grp.inverse(cl_e);
  out.report.subgroup = is_subgroup(grp, out.h);
  out.report.normal = is_normal_subgroup(grp, out.h);
  out.report.antidiscrete = antidiscrete_subspace(g.space(), out.h);
  if (!out.report.normal) return out;

  std::vector<int> coset_of(static_cast<std::size_t>(grp.order()), -1);
  for (int x = 0; x < grp.order(); ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const PointSet coset = grp.left_translate(x, out.h);
    for (int y : coset) coset_of[static_cast<std::size_t>(y)] = static_cast<int>(out.cosets.size());
    out.cosets.push_back(coset);
  }
  const int k = static_cast<int>(out.cosets.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int product = grp.mul(out.cosets[static_cast<std::size_t>(a)].first(),
                                  out.cosets[static_cast<std::size_t>(b)].first());
      table[a][b] = coset_of[static_cast<std::size_t>(product)];
    }
  }
  Quotient q = quotient_by_partition(g.space(), out.cosets);
  out.quotient.emplace(FiniteGroup(std::move(table), grp.name() + "/H"), q.space);
  out.projection.emplace(g, *out.quotient, std::move(coset_of));

  out.report.projection_preserves = preserves_topology(out.projection->map());
  out.report.quotient_semitopological = is_semitopological(*out.quotient);
  out.report.quotient_t0 = separation_profile(out.quotient->space()).t0;
  const Quotient reflection = t0_quotient(g.space());
  out.report.matches_space_t0_quotient =
      reflection.blocks == out.cosets && reflection.space == out.quotient->space();
  return out;
}

ClosedSubgroupReport closed_subgroup_check(const GroupWithTopology& g) {
  require_semitopological(g);
  const T0QuotientGroup t0 = t0_quotient_group(g);
  const PointSet cl_e = g.identity_closure();
  ClosedSubgroupReport r;
  r.r0 = separation_profile(g.space()).r0;
  r.closure_equals_h = cl_e == t0.h;
  r.closed = g.space().is_closed(cl_e);
  r.normal_subgroup = is_normal_subgroup(g.group(), cl_e);
  r.antidiscrete = antidiscrete_subspace(g.space(), cl_e);
  r.quotient_t1 = t0.quotient && separation_profile(t0.quotient->space()).t1;
  r.projection_preserves = t0.report.projection_preserves;
  return r;
}

bool QuotientHomomorphismReport::passed() const noexcept {
  for (Verdict v : {open_if_quotient, codomain_semi_if_quotient,
                    preserves_iff_quotient_antidiscrete_kernel, codomain_semi_if_preserving}) {
    if (v == Verdict::fail) return false;
  }
  return true;
}

QuotientHomomorphismReport quotient_homomorphism_check(const GroupHomomorphism& phi) {
  const MapProfile profile = map_profile(phi.map());
  if (!profile.surjective) throw Error(ErrorCode::not_surjective, "homomorphism is not onto");
  if (!is_semitopological(phi.domain())) {
    throw Error(ErrorCode::domain_not_semitopological, "domain is not semitopological");
  }
  const bool codomain_semi = is_semitopological(phi.codomain());
  QuotientHomomorphismReport r;
  r.quotient_map = profile.quotient_map;
  r.preserves = preserves_topology(phi.map());
  r.kernel_antidiscrete = antidiscrete_subspace(phi.domain().space(), phi.kernel());
  r.open_if_quotient = gated(r.quotient_map, profile.open_map);
  r.codomain_semi_if_quotient = gated(r.quotient_map, codomain_semi);
  r.preserves_iff_quotient_antidiscrete_kernel =
      verdict(r.preserves == (r.quotient_map && r.kernel_antidiscrete));
  r.codomain_semi_if_preserving = gated(r.preserves, codomain_semi);
  return r;
}

bool ClassPreservationReport::passed() const noexcept {
  for (const ClassAgreement& c : classes) {
    if (!c.agree()) return false;
  }
  return true;
}

ClassPreservationReport class_preservation_check(const GroupHomomorphism& phi) {
  if (!preserves_topology(phi.map())) {
    throw Error(ErrorCode::not_topology_preserving, "homomorphism does not preserve the topology");
  }
  const ClassProfile d = class_profile(phi.domain());
  const ClassProfile c = class_profile(phi.codomain());
  ClassPreservationReport r;
  r.classes = {{
      {"semitopological", d.semitopological, c.semitopological},
      {"quasitopological", d.quasitopological, c.quasitopological},
      {"paratopological", d.paratopological, c.paratopological},
      {"almost_paratopological", d.almost_paratopological(), c.almost_paratopological()},
      // Every finite space is compact.
      {"compact", true, true},
  }};
  return r;
}

GroupWithTopology subgroup_with_subspace(const GroupWithTopology& g, PointSet s) {
  const FiniteGroup& grp = g.group();
  if (!is_subgroup(grp, s)) throw Error(ErrorCode::not_a_subgroup, to_string(s), {s});
  const std::vector<int> elements = s.to_vector();
  std::vector<int> position(static_cast<std::size_t>(grp.order()), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) position[static_cast<std::size_t>(elements[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elements.size());
  for (int a : elements) {
    for (int b : elements) {
      table[static_cast<std::size_t>(position[static_cast<std::size_t>(a)])].push_back(
          position[static_cast<std::size_t>(grp.mul(a, b))]);
    }
  }
  return GroupWithTopology(FiniteGroup(std::move(table), grp.name() + to_string(s)),
                           subspace(g.space(), s));
}

GroupWithTopology product_group(const GroupWithTopology& a, const GroupWithTopology& b) {
  if (a.order() * b.order() > kMaxPoints) {
    throw Error(ErrorCode::order_too_large,
                "product has order " + std::to_string(a.order() * b.order()));
  }
  return GroupWithTopology(direct_product(a.group(), b.group()), product(a.space(), b.space()));
}

}  // namespace fintop
