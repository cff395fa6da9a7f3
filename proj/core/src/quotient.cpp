#include "fintop/quotient.hpp"

#include "fintop/error.hpp"

namespace fintop {

Quotient quotient_by_partition(const FiniteSpace& space, std::span<const PointSet> blocks) {
  const int k = static_cast<int>(blocks.size());
  if (k < 1) throw Error(ErrorCode::invalid_partition, "no blocks");
  std::vector<int> table(static_cast<std::size_t>(space.size()), -1);
  PointSet covered;
  for (int b = 0; b < k; ++b) {
    const PointSet block = blocks[static_cast<std::size_t>(b)];
    if (block.empty()) throw Error(ErrorCode::invalid_partition, "empty block");
    if (!block.subset_of(space.carrier())) {
      throw Error(ErrorCode::invalid_partition, to_string(block) + " leaves the carrier", {block});
    }
    if (block.intersects(covered)) {
      throw Error(ErrorCode::invalid_partition, to_string(block) + " overlaps an earlier block", {block});
    }
    covered |= block;
    for (int x : block) table[static_cast<std::size_t>(x)] = b;
  }
  if (covered != space.carrier()) {
    throw Error(ErrorCode::invalid_partition, "blocks miss " + to_string(space.carrier() - covered));
  }

  // V is open in the quotient iff its preimage is up-closed, i.e. iff V is
  // up-closed for the relation induced on blocks. Take its transitive closure.
  std::vector<PointSet> rows(static_cast<std::size_t>(k));
  for (int x = 0; x < space.size(); ++x) {
    const auto bx = static_cast<std::size_t>(table[static_cast<std::size_t>(x)]);
    for (int y : space.min_open(x)) rows[bx].insert(table[static_cast<std::size_t>(y)]);
  }
  for (int mid = 0; mid < k; ++mid) {
    for (auto& row : rows) {
      if (row.contains(mid)) row |= rows[static_cast<std::size_t>(mid)];
    }
  }
  FiniteSpace quotient(Preorder::from_rows(rows));
  SpaceMap projection(space, quotient, std::move(table));
  return Quotient{std::move(quotient), std::move(projection),
                  std::vector<PointSet>(blocks.begin(), blocks.end())};
}

std::vector<PointSet> indistinguishability_classes(const FiniteSpace& space) {
  std::vector<PointSet> classes;
  PointSet seen;
  for (int x = 0; x < space.size(); ++x) {
    if (seen.contains(x)) continue;
    const PointSet cls = space.min_open(x) & space.point_closure(x);
    classes.push_back(cls);
    seen |= cls;
  }
  return classes;
}

Quotient t0_quotient(const FiniteSpace& space) {
  const std::vector<PointSet> classes = indistinguishability_classes(space);
  return quotient_by_partition(space, classes);
}

}  // namespace fintop
