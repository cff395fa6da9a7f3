#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/group.hpp"
#include "fintop/group_topology.hpp"
#include "fintop/space.hpp"

namespace fintop {

inline constexpr int kMaxEnumerationPoints = 5;
inline constexpr int kMaxEnumerationOrder = 8;

/// Resumable generator of topologies in strictly increasing key order.
///
/// In all_preorders mode it backtracks over the off-diagonal cells of the
/// relation matrix in row-major order, pruning any partial assignment with a
/// fully determined transitivity violation. An optional fixed first row
/// selects one shard. In shift_invariant mode the relation is determined by
/// the up-set P of the identity (x <= y iff x^{-1} y in P); every candidate
/// P is tried in key order and kept when the relation is a preorder that is
/// also invariant under right translations.
class EnumerationCursor {
 public:
  enum class Mode { all_preorders, shift_invariant_for_group };

  /// Throws size_too_large outside 1..5 points.
  static EnumerationCursor all_preorders(int n, std::optional<PointSet> first_row = std::nullopt);
  /// Throws order_too_large past order 8.
  static EnumerationCursor shift_invariant(const FiniteGroup& group);

  std::optional<FiniteSpace> next();

  int size() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }
  const std::optional<FiniteGroup>& group() const noexcept { return group_; }
  /// Key of the last emission; empty before the first.
  const std::string& position() const noexcept { return position_; }
  std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  EnumerationCursor(int n, Mode mode) : n_(n), mode_(mode) {}

  std::optional<Preorder> next_preorder();
  std::optional<Preorder> next_invariant();
  bool consistent(int i, int j, bool value) const noexcept;

  int n_;
  Mode mode_;
  std::optional<FiniteGroup> group_;
  std::string position_;
  std::uint64_t emitted_ = 0;

  // all_preorders state
  struct Cell {
    int row;
    int col;
    int lo;
    int hi;
  };
  std::vector<Cell> cells_;
  std::vector<int> values_;
  std::size_t pos_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::array<PointSet, kMaxPoints> rel_{};
  std::array<PointSet, kMaxPoints> known_{};

  // shift_invariant state
  std::uint32_t next_code_ = 0;
};

std::vector<FiniteSpace> enumerate_topologies(int n);
void for_each_topology(int n, const std::function<void(const FiniteSpace&)>& visit);

/// Possible first rows of an n-point preorder (every subset containing 0),
/// in shard order.
std::vector<PointSet> shard_keys(int n);
std::vector<FiniteSpace> enumerate_topologies_shard(int n, PointSet first_row);

enum class GroupClass : unsigned {
  semitopological = 1u << 0,
  quasitopological = 1u << 1,
  paratopological = 1u << 2,
  topological = 1u << 3,
  almost_paratopological = 1u << 4,
  almost_paratopological_raw = 1u << 5,
};

/// Conjunction of class requirements. An empty filter admits every topology.
class ClassFilter {
 public:
  constexpr ClassFilter() noexcept = default;
  constexpr ClassFilter(std::initializer_list<GroupClass> classes) noexcept {
    for (GroupClass c : classes) bits_ |= static_cast<unsigned>(c);
  }

  static ClassFilter parse(std::string_view csv);

  constexpr bool requires_class(GroupClass c) const noexcept {
    return (bits_ & static_cast<unsigned>(c)) != 0;
  }
  /// Every requested class forces semitopological, so shift-invariant
  /// enumeration is complete for this filter.
  constexpr bool implies_semitopological() const noexcept {
    return (bits_ & ~static_cast<unsigned>(GroupClass::almost_paratopological_raw)) != 0;
  }
  bool accepts(const ClassProfile& p) const noexcept;

 private:
  unsigned bits_ = 0;
};

struct GroupTopology {
  GroupWithTopology value;
  ClassProfile profile;
};

/// Every topology on the carrier satisfying `filter`, in key order.
/// Semitopological filters need order <= 8; other filters walk all
/// preorders and need order <= 5.
std::vector<GroupTopology> enumerate_group_topologies(
    const FiniteGroup& group, ClassFilter filter = {GroupClass::semitopological});

/// Least relabelled preorder key over all carrier permutations.
FiniteSpace canonical_representative(const FiniteSpace& space);

/// One representative per homeomorphism class, in order of first appearance.
std::vector<FiniteSpace> canonical_up_to_homeomorphism(std::span<const FiniteSpace> spaces);

struct MineBounds {
  int max_order = kMaxEnumerationOrder;
  int max_points = kMaxEnumerationPoints;
};

struct MineResult {
  std::string target;
  std::string universe;
  std::uint64_t population = 0;
  std::vector<std::string> witnesses;
  /// Set when any witness counts as a failure.
  bool expect_none = false;

  bool none() const noexcept { return witnesses.empty(); }
  std::string certificate() const;
};

std::vector<std::string> mine_targets();
/// Throws unknown_target or bounds_too_large.
MineResult mine(std::string_view target, const MineBounds& bounds = {});

}  // namespace fintop
