#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "fintop/group_topology.hpp"
#include "fintop/space_map.hpp"

namespace fintop {

/// A multiplicative map between groups with topology.
class GroupHomomorphism {
 public:
  /// Throws invalid_map or not_a_homomorphism.
  GroupHomomorphism(GroupWithTopology domain, GroupWithTopology codomain, std::vector<int> table);

  static GroupHomomorphism identity(const GroupWithTopology& g);

  const GroupWithTopology& domain() const noexcept { return domain_; }
  const GroupWithTopology& codomain() const noexcept { return codomain_; }
  const SpaceMap& map() const noexcept { return map_; }
  PointSet kernel() const noexcept { return map_.preimage(PointSet::single(FiniteGroup::identity)); }

 private:
  GroupWithTopology domain_;
  GroupWithTopology codomain_;
  SpaceMap map_;
};

struct T0QuotientGroupReport {
  bool subgroup = false;
  bool normal = false;
  bool antidiscrete = false;
  bool projection_preserves = false;
  bool quotient_semitopological = false;
  bool quotient_t0 = false;
  bool matches_space_t0_quotient = false;

  bool passed() const noexcept {
    return subgroup && normal && antidiscrete && projection_preserves &&
           quotient_semitopological && quotient_t0 && matches_space_t0_quotient;
  }
};

struct T0QuotientGroup {
  PointSet h;  // cl{e} & cl{e}^{-1}
  std::vector<PointSet> cosets;
  // Present only when h is a normal subgroup.
  std::optional<GroupWithTopology> quotient;
  std::optional<GroupHomomorphism> projection;
  T0QuotientGroupReport report;
};

/// G / H for H = cl{e} & cl{e}^{-1}, cosets ordered by smallest member.
/// Throws not_semitopological.
T0QuotientGroup t0_quotient_group(const GroupWithTopology& g);

struct ClosedSubgroupReport {
  bool r0 = false;
  bool closure_equals_h = false;
  bool closed = false;
  bool normal_subgroup = false;
  bool antidiscrete = false;
  bool quotient_t1 = false;
  bool projection_preserves = false;

  bool passed() const noexcept {
    return r0 && closure_equals_h && closed && normal_subgroup && antidiscrete && quotient_t1 &&
           projection_preserves;
  }
};

/// Throws not_semitopological.
ClosedSubgroupReport closed_subgroup_check(const GroupWithTopology& g);

struct QuotientHomomorphismReport {
  bool quotient_map = false;
  bool preserves = false;
  bool kernel_antidiscrete = false;
  Verdict open_if_quotient = Verdict::vacuous;
  Verdict codomain_semi_if_quotient = Verdict::vacuous;
  Verdict preserves_iff_quotient_antidiscrete_kernel = Verdict::vacuous;
  Verdict codomain_semi_if_preserving = Verdict::vacuous;

  bool passed() const noexcept;
};

/// Throws not_surjective or domain_not_semitopological.
QuotientHomomorphismReport quotient_homomorphism_check(const GroupHomomorphism& phi);

struct ClassAgreement {
  std::string_view name;
  bool domain = false;
  bool codomain = false;
  bool agree() const noexcept { return domain == codomain; }
};

struct ClassPreservationReport {
  // semitopological, quasitopological, paratopological,
  // almost_paratopological, compact
  std::array<ClassAgreement, 5> classes;
  bool passed() const noexcept;
};

/// Throws not_topology_preserving.
ClassPreservationReport class_preservation_check(const GroupHomomorphism& phi);

/// Throws not_a_subgroup.
GroupWithTopology subgroup_with_subspace(const GroupWithTopology& g, PointSet s);

/// Throws order_too_large past 16 elements.
GroupWithTopology product_group(const GroupWithTopology& a, const GroupWithTopology& b);

}  // namespace fintop
