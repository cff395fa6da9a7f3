#pragma once

#include <span>
#include <vector>

#include "fintop/space_map.hpp"

namespace fintop {

struct Quotient {
  FiniteSpace space;
  SpaceMap projection;
  std::vector<PointSet> blocks;
};

/// Quotient by a partition; block i becomes point i. Throws invalid_partition
/// unless the blocks are nonempty, disjoint and cover the carrier.
Quotient quotient_by_partition(const FiniteSpace& space, std::span<const PointSet> blocks);

/// Kolmogorov quotient: classes of topological indistinguishability,
/// ordered by their smallest member.
Quotient t0_quotient(const FiniteSpace& space);

/// Classes of topological indistinguishability, ordered by smallest member.
std::vector<PointSet> indistinguishability_classes(const FiniteSpace& space);

}  // namespace fintop
