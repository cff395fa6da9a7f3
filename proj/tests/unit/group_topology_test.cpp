#include <vector>

#include "common.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/error.hpp"
#include "fintop/group.hpp"
#include "fintop/group_quotient.hpp"
#include "fintop/group_topology.hpp"
#include "fintop/space.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

GroupWithTopology with_opens(const FiniteGroup& g, std::vector<PointSet> opens) {
  return GroupWithTopology(g, validate_topology(g.order(), opens));
}

GroupWithTopology z4_coset() { return with_opens(cyclic_group(4), {{}, {0, 2}, {1, 3}, {0, 1, 2, 3}}); }

GroupWithTopology z2_point() { return with_opens(cyclic_group(2), {{}, {0}, {0, 1}}); }

GroupWithTopology discrete(const FiniteGroup& g) { return GroupWithTopology(g, discrete_space(g.order())); }

GroupWithTopology antidiscrete(const FiniteGroup& g) { return GroupWithTopology(g, antidiscrete_space(g.order())); }

WideSet pairs(int n, std::initializer_list<std::pair<int, int>> ps) {
  WideSet w;
  for (auto [x, y] : ps) w.set(static_cast<std::size_t>(x * n + y));
  return w;
}

}  // namespace

TEST_SUITE("group-topology") {

TEST_CASE("builtin groups") {
  const FiniteGroup z4 = cyclic_group(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(z4.mul(i, j) == (i + j) % 4);
  }
  const FiniteGroup k = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(k.order() == 4);
  CHECK(k == builtin_group("klein4"));
  for (int x = 0; x < 4; ++x) CHECK(k.mul(x, x) == 0);
  const FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  const auto pair = s3.non_commuting_pair();
  REQUIRE(pair.has_value());
  CHECK(s3.mul(pair->first, pair->second) != s3.mul(pair->second, pair->first));
  CHECK(builtin_group("cyclic(4)") == z4);
  CHECK(builtin_group("dihedral(4)").order() == 8);
  CHECK_FALSE(builtin_group("dihedral4").is_abelian());
  CHECK_FALSE(builtin_group("quaternion8").is_abelian());
  CHECK_THROWS_CODE(builtin_group("monster"), ErrorCode::unknown_spec);
  CHECK_THROWS_CODE(FiniteGroup({{0, 1}, {1, 1}}), ErrorCode::invalid_group);
}

TEST_CASE("normal subgroups") {
  const FiniteGroup s3 = symmetric_group(3);
  int normal = 0;
  for (PointSet h : subgroups(s3)) normal += is_normal_subgroup(s3, h);
  CHECK(subgroups(s3).size() == 6);
  CHECK(normal == 3);
}

TEST_CASE("class_profile fixtures") {
  const ClassProfile c = class_profile(z4_coset());
  CHECK((c.semitopological && c.quasitopological && c.paratopological && c.topological &&
         c.almost_paratopological_raw));
  const ClassProfile z = class_profile(z2_point());
  CHECK_FALSE(z.semitopological);
  CHECK(z.almost_paratopological_raw);
  for (const std::string& name : builtin_universe()) {
    const ClassProfile a = class_profile(antidiscrete(builtin_group(name)));
    CHECK((a.semitopological && a.quasitopological && a.paratopological && a.topological &&
           a.almost_paratopological_raw));
  }
  CHECK_THROWS_CODE(GroupWithTopology(cyclic_group(3), discrete_space(2)), ErrorCode::carrier_mismatch);
}

TEST_CASE("class_profile agrees with the open-set definitions on every topology of small groups") {
  for (const std::string& name : {"cyclic2", "cyclic3", "cyclic4", "klein4"}) {
    const FiniteGroup g = builtin_group(name);
    for (const FiniteSpace& x : enumerate_topologies(g.order())) {
      const GroupWithTopology gt(g, x);
      const oracle::GroupClasses o = oracle::group_classes(g, oracle::family_of(x.opens()));
      const ClassProfile p = class_profile(gt);
      CAPTURE(name);
      CAPTURE(x.key());
      REQUIRE(p.semitopological == o.semitopological);
      REQUIRE(p.quasitopological == (o.semitopological && o.inversion));
      REQUIRE(p.paratopological == o.multiplication);
      REQUIRE(p.topological == (o.multiplication && o.inversion));
      REQUIRE(class_profile(gt, NeighborhoodPath::all_open) == p);
    }
  }
}

TEST_CASE("closure formula") {
  const ClosureFormulaReport r = closure_formula_check(z4_coset(), {1});
  CHECK(r.closure == PointSet{1, 3});
  CHECK(r.right_formula == PointSet{1, 3});
  CHECK(r.left_formula == PointSet{1, 3});
  CHECK(r.agree);
  const FiniteGroup s3 = symmetric_group(3);
  for (unsigned m = 1; m < 64; ++m) {
    const ClosureFormulaReport a = closure_formula_check(antidiscrete(s3), PointSet::from_bits(m));
    CHECK(a.closure == s3.carrier());
    CHECK(a.agree);
    const ClosureFormulaReport d = closure_formula_check(discrete(s3), PointSet::from_bits(m));
    CHECK(d.closure == PointSet::from_bits(m));
    CHECK(d.agree);
  }
  CHECK_THROWS_CODE(closure_formula_check(z2_point(), {0}), ErrorCode::not_semitopological);
}

TEST_CASE("e_core") {
  const IdentityCore c = e_core(z4_coset());
  CHECK(c.by_closures == PointSet{0, 2});
  CHECK(c.by_squares == PointSet{0, 2});
  CHECK(z4_coset().identity_closure() == PointSet{0, 2});
  const IdentityCore a = e_core(antidiscrete(cyclic_group(3)));
  CHECK(a.by_closures == PointSet{0, 1, 2});
  CHECK(a.by_squares == PointSet{0, 1, 2});
  const IdentityCore z = e_core(z2_point());
  CHECK(z.by_closures == PointSet{0, 1});
  CHECK(z.by_squares == PointSet{0});
  CHECK_FALSE(z.agree());
  CHECK(e_core(z2_point(), NeighborhoodPath::all_open).by_squares == PointSet{0});
}

TEST_CASE("almost_paratopological_iff_core") {
  CHECK(almost_paratopological_iff_core(z4_coset()));
  CHECK(almost_paratopological_iff_core(antidiscrete(symmetric_group(3))));
}

TEST_CASE("S_G analysis") {
  const SSetAnalysis s = s_set_analysis(z4_coset());
  CHECK(s.s_set == pairs(4, {{0, 0}, {1, 3}, {2, 2}, {3, 1}}));
  WideSet expected;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if ((x + y) % 2 == 0) expected.set(static_cast<std::size_t>(x * 4 + y));
    }
  }
  CHECK(s.closure == expected);
  CHECK(s.closure.count() == 8);
  CHECK(s.match);
  CHECK_FALSE(s.s_closed);

  const SSetAnalysis d = s_set_analysis(discrete(cyclic_group(3)));
  CHECK(d.closure == d.s_set);
  CHECK(d.s_closed);
  const SSetAnalysis a = s_set_analysis(antidiscrete(cyclic_group(2)));
  CHECK(a.closure.count() == 4);
  CHECK(a.preimage_e == a.closure);
}

TEST_CASE("closure in G x G agrees with the rectangle-product oracle") {
  const GroupWithTopology g = z4_coset();
  const oracle::Family f = oracle::family_of(g.space().opens());
  const oracle::Family prod = oracle::product_opens(4, f, 4, f);
  const ProductPreorder pp(g.space(), g.space());
  for (unsigned s = 0; s < (1u << 16); s += 37) {
    WideSet w;
    for (int i = 0; i < 16; ++i) {
      if ((s >> i) & 1u) w.set(static_cast<std::size_t>(i));
    }
    const WideSet c = pp.closure(w);
    REQUIRE(c.to_ulong() == oracle::closure(16, prod, static_cast<std::uint16_t>(s)));
  }
}

TEST_CASE("core_separation equivalence") {
  const CoreSeparationReport d = core_separation_equivalence(discrete(cyclic_group(4)));
  CHECK((d.t1_almost_paratopological && d.core_is_identity && d.s_closed && d.all_agree));
  const CoreSeparationReport a = core_separation_equivalence(antidiscrete(cyclic_group(3)));
  CHECK_FALSE((a.t1_almost_paratopological || a.core_is_identity || a.s_closed));
  CHECK(a.all_agree);
  const CoreSeparationReport z = core_separation_equivalence(z4_coset());
  CHECK_FALSE((z.t1_almost_paratopological || z.core_is_identity || z.s_closed));
}

TEST_CASE("Sym topology") {
  const SymSpace z = sym_space(z4_coset());
  CHECK(z.sym.space() == z4_coset().space());
  CHECK(z.family_already_topology);
  CHECK(sym_space(discrete(symmetric_group(3))).sym.space() == discrete_space(6));
  CHECK(sym_space(antidiscrete(symmetric_group(3))).sym.space() == antidiscrete_space(6));

  const SymPropsReport r = sym_props_check(z4_coset());
  CHECK(r.quasitopological_if_semi == Verdict::pass);
  CHECK(r.topological_if_para == Verdict::pass);
  CHECK(r.j_homeomorphism == Verdict::pass);
  CHECK(r.s_closed_if_t1_ap == Verdict::vacuous);
  CHECK(r.passed());
  CHECK(sym_props_check(z2_point()).j_homeomorphism == Verdict::pass);
  const SymPropsReport d = sym_props_check(discrete(cyclic_group(3)));
  CHECK(d.passed());
  CHECK(d.s_closed_if_t1_ap == Verdict::pass);
  CHECK(d.hausdorff_quasi_if_t1_ap == Verdict::pass);
}

TEST_CASE("on small groups every semitopological topology has continuous inversion") {
  for (const std::string& name : {"cyclic3", "cyclic4", "klein4"}) {
    const FiniteGroup g = builtin_group(name);
    for (const FiniteSpace& x : enumerate_topologies(g.order())) {
      const GroupWithTopology gt(g, x);
      if (is_semitopological(gt)) REQUIRE(inversion_continuous(gt));
    }
  }
}

TEST_CASE("T0 quotient group") {
  const T0QuotientGroup q = t0_quotient_group(z4_coset());
  CHECK(q.h == PointSet{0, 2});
  REQUIRE(q.quotient.has_value());
  CHECK(q.quotient->group() == cyclic_group(2));
  CHECK(q.quotient->space() == discrete_space(2));
  CHECK(q.report.passed());

  const T0QuotientGroup a = t0_quotient_group(antidiscrete(symmetric_group(3)));
  CHECK(a.h == symmetric_group(3).carrier());
  REQUIRE(a.quotient.has_value());
  CHECK(a.quotient->order() == 1);

  const T0QuotientGroup d = t0_quotient_group(discrete(symmetric_group(3)));
  CHECK(d.h == PointSet{0});
  REQUIRE(d.quotient.has_value());
  CHECK(d.quotient->group() == symmetric_group(3));
  CHECK_THROWS_CODE(t0_quotient_group(z2_point()), ErrorCode::not_semitopological);
}

TEST_CASE("closure of the identity is a closed normal subgroup") {
  const ClosedSubgroupReport r = closed_subgroup_check(z4_coset());
  CHECK(r.passed());
  CHECK(r.r0);
  CHECK(r.quotient_t1);
  CHECK(closed_subgroup_check(antidiscrete(quaternion_group())).passed());
}

TEST_CASE("quotient homomorphisms") {
  const T0QuotientGroup q = t0_quotient_group(z4_coset());
  REQUIRE(q.projection.has_value());
  const GroupHomomorphism& pi = *q.projection;
  for (int x = 0; x < 4; ++x) CHECK(pi.map()(x) == x % 2);
  CHECK(pi.kernel() == PointSet{0, 2});
  const QuotientHomomorphismReport r = quotient_homomorphism_check(pi);
  CHECK(r.quotient_map);
  CHECK(r.preserves);
  CHECK(r.kernel_antidiscrete);
  CHECK(r.open_if_quotient == Verdict::pass);
  CHECK(r.passed());
  CHECK(class_preservation_check(pi).passed());

  const GroupHomomorphism id = GroupHomomorphism::identity(z4_coset());
  CHECK(id.kernel() == PointSet{0});
  CHECK(quotient_homomorphism_check(id).passed());
  CHECK(class_preservation_check(id).passed());

  const T0QuotientGroup a = t0_quotient_group(antidiscrete(cyclic_group(4)));
  const ClassPreservationReport cp = class_preservation_check(*a.projection);
  CHECK(cp.passed());
  for (const ClassAgreement& c : cp.classes) {
    CHECK(c.domain);
    CHECK(c.codomain);
  }

  CHECK_THROWS_CODE(GroupHomomorphism(discrete(cyclic_group(4)), discrete(cyclic_group(2)), {0, 1, 1, 0}),
                    ErrorCode::not_a_homomorphism);
}

TEST_CASE("subgroups and products") {
  const GroupWithTopology sub = subgroup_with_subspace(z4_coset(), {0, 2});
  CHECK(sub.order() == 2);
  CHECK(sub.space() == antidiscrete_space(2));
  CHECK_THROWS_CODE(subgroup_with_subspace(z4_coset(), {0, 1}), ErrorCode::not_a_subgroup);

  const GroupWithTopology k = product_group(discrete(cyclic_group(2)), discrete(cyclic_group(2)));
  CHECK(k.group() == builtin_group("klein4"));
  CHECK(k.space() == discrete_space(4));
  const GroupWithTopology m = product_group(antidiscrete(cyclic_group(2)), discrete(cyclic_group(2)));
  CHECK(m.space().min_open(0) == PointSet{0, 2});
}

TEST_CASE("Mal'tsev operation") {
  for (const std::string& name : builtin_universe()) {
    const MaltsevReport r = maltsev_check(antidiscrete(builtin_group(name)));
    CHECK(r.identities);
  }
  const MaltsevReport z = maltsev_check(z4_coset());
  CHECK(z.identities);
  CHECK(z.separate_continuity == Verdict::pass);
  const MaltsevReport p = maltsev_check(z2_point());
  CHECK(p.identities);
  CHECK(p.separate_continuity == Verdict::vacuous);
  CHECK(maltsev(cyclic_group(4), 1, 3, 2) == 0);
}

}  // TEST_SUITE
