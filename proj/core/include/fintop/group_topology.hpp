#pragma once

#include <bitset>
#include <span>
#include <vector>

#include "fintop/group.hpp"
#include "fintop/space.hpp"
#include "fintop/verdict.hpp"

namespace fintop {

/// A finite group together with an arbitrary topology on its carrier. No
/// continuity is assumed; class membership is computed on demand.
class GroupWithTopology {
 public:
  /// Throws carrier_mismatch.
  GroupWithTopology(FiniteGroup group, FiniteSpace space);

  const FiniteGroup& group() const noexcept { return group_; }
  const FiniteSpace& space() const noexcept { return space_; }
  int order() const noexcept { return group_.order(); }

  /// cl{e}
  PointSet identity_closure() const noexcept { return space_.point_closure(FiniteGroup::identity); }
  /// Smallest open neighbourhood of e; contained in every other one.
  PointSet minimal_neighborhood() const noexcept { return space_.min_open(FiniteGroup::identity); }
  /// All open sets containing e.
  std::vector<PointSet> identity_neighborhoods() const;

 private:
  FiniteGroup group_;
  FiniteSpace space_;
};

/// Which family of identity neighbourhoods quantified formulas range over.
/// `minimal` uses min_open(e) alone; `all_open` walks every open set
/// containing e and is kept as the reference path.
enum class NeighborhoodPath { minimal, all_open };

struct ClassProfile {
  bool semitopological = false;
  bool quasitopological = false;
  bool paratopological = false;
  bool topological = false;
  bool almost_paratopological_raw = false;

  /// The class label only applies to semitopological groups.
  bool almost_paratopological() const noexcept {
    return almost_paratopological_raw && semitopological;
  }
  friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

bool is_semitopological(const GroupWithTopology& g) noexcept;
bool inversion_continuous(const GroupWithTopology& g) noexcept;
bool multiplication_continuous(const GroupWithTopology& g) noexcept;
bool almost_paratopological_raw(const GroupWithTopology& g,
                                NeighborhoodPath path = NeighborhoodPath::minimal);

ClassProfile class_profile(const GroupWithTopology& g,
                           NeighborhoodPath path = NeighborhoodPath::minimal);

struct ClosureFormulaReport {
  PointSet closure;
  PointSet right_formula;  // intersection of M U^{-1}
  PointSet left_formula;   // intersection of U^{-1} M
  bool agree = false;
};

/// Closure of M computed from the topology and from both translate
/// intersections over open neighbourhoods of e. Throws not_semitopological.
ClosureFormulaReport closure_formula_check(const GroupWithTopology& g, PointSet m);

struct IdentityCore {
  PointSet by_closures;  // intersection of cl(U^{-1})
  PointSet by_squares;   // intersection of U^{-1} U^{-1}
  bool agree() const noexcept { return by_closures == by_squares; }
};

IdentityCore e_core(const GroupWithTopology& g, NeighborhoodPath path = NeighborhoodPath::minimal);

/// Definition of almost paratopological agrees with E_G == cl{e}.
/// Throws not_semitopological.
bool almost_paratopological_iff_core(const GroupWithTopology& g);

/// Subsets of a product carrier of up to 256 points.
using WideSet = std::bitset<kMaxPoints * kMaxPoints>;

/// X x Y for analysis only: the carrier may reach 256 points, so opens are
/// never listed. Pair (x, y) sits at x * |Y| + y.
class ProductPreorder {
 public:
  ProductPreorder(const FiniteSpace& x, const FiniteSpace& y);

  int size() const noexcept { return x_.size() * y_.size(); }
  int index(int x, int y) const noexcept { return x * y_.size() + y; }
  bool precedes(int p, int q) const noexcept;
  WideSet closure(const WideSet& s) const;
  bool is_closed(const WideSet& s) const { return closure(s) == s; }
  /// Subspace preorder on the listed product points (at most 16).
  Preorder subspace(std::span<const int> points) const;

 private:
  FiniteSpace x_;
  FiniteSpace y_;
};

struct SSetAnalysis {
  WideSet s_set;       // {(x, y) : xy = e}
  WideSet closure;     // closure of s_set in G x G
  WideSet preimage_e;  // {(x, y) : xy in E_G}
  bool match = false;
  bool s_closed = false;
};

SSetAnalysis s_set_analysis(const GroupWithTopology& g);

struct CoreSeparationReport {
  bool t1_almost_paratopological = false;
  bool core_is_identity = false;
  bool s_closed = false;
  bool all_agree = false;
};

/// Throws not_semitopological.
CoreSeparationReport core_separation_equivalence(const GroupWithTopology& g);

struct SymSpace {
  GroupWithTopology sym;
  std::vector<PointSet> base_family;  // {U & V^{-1}}, ascending, deduplicated
  bool family_already_topology = false;
};

/// Retopologizes by the base {U & V^{-1} : U, V open}.
SymSpace sym_space(const GroupWithTopology& g);

struct SymPropsReport {
  Verdict quasitopological_if_semi = Verdict::vacuous;
  Verdict topological_if_para = Verdict::vacuous;
  Verdict j_homeomorphism = Verdict::vacuous;  // x -> (x, x^{-1}) onto S_G
  Verdict refines = Verdict::vacuous;
  Verdict s_closed_if_t1_ap = Verdict::vacuous;
  Verdict hausdorff_quasi_if_t1_ap = Verdict::vacuous;

  bool passed() const noexcept;
};

SymPropsReport sym_props_check(const GroupWithTopology& g);

/// M(x, y, z) = x y^{-1} z
int maltsev(const FiniteGroup& g, int x, int y, int z) noexcept;

struct MaltsevReport {
  bool identities = false;
  Verdict separate_continuity = Verdict::vacuous;
};

MaltsevReport maltsev_check(const GroupWithTopology& g);

}  // namespace fintop
