#pragma once

#include <span>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

/// A total function between two finite spaces.
class SpaceMap {
 public:
  /// Throws invalid_map when the table is not total or leaves the codomain.
  SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> table);

  static SpaceMap identity(const FiniteSpace& space);

  const FiniteSpace& domain() const noexcept { return domain_; }
  const FiniteSpace& codomain() const noexcept { return codomain_; }
  std::span<const int> table() const noexcept { return table_; }
  int operator()(int x) const noexcept { return table_[static_cast<std::size_t>(x)]; }

  PointSet image(PointSet s) const noexcept;
  PointSet preimage(PointSet s) const noexcept;

 private:
  FiniteSpace domain_;
  FiniteSpace codomain_;
  std::vector<int> table_;
};

/// g after f. Throws invalid_map unless f's codomain is g's domain.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

struct MapProfile {
  bool surjective = false;
  bool continuous = false;
  bool open_map = false;
  bool closed_map = false;
  bool quotient_map = false;

  bool all() const noexcept {
    return surjective && continuous && open_map && closed_map && quotient_map;
  }
};

MapProfile map_profile(const SpaceMap& f);

/// Surjective, continuous, open, closed, and for every subset U of the
/// domain: U is open iff U is saturated and f(U) is open. The subset sweep
/// is exhaustive.
bool preserves_topology(const SpaceMap& f);

bool is_homeomorphism(const SpaceMap& f);

struct PreservationReport {
  bool preserves = false;              // the defining condition
  bool pullback_bijective = false;     // U -> f^{-1}(U) is a bijection of topologies
  bool quotient_antidiscrete = false;  // quotient map with antidiscrete fibers
  bool all_agree = false;
};

/// Evaluates the three characterizations of a topology-preserving map
/// independently. Throws not_surjective.
PreservationReport preservation_equivalence(const SpaceMap& f);

}  // namespace fintop
