#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fintop/point_set.hpp"

namespace fintop {

/// A group of order 1..16 given by its Cayley table, identity at index 0.
class FiniteGroup {
 public:
  static constexpr int identity = 0;

  /// Throws order_too_large or invalid_group (bad shape, identity not at 0,
  /// missing inverses, non-associative).
  FiniteGroup(std::vector<std::vector<int>> table, std::string name = {});

  int order() const noexcept { return order_; }
  PointSet carrier() const noexcept { return PointSet::full(order_); }
  const std::string& name() const noexcept { return name_; }

  int mul(int a, int b) const noexcept { return table_[index(a, b)]; }
  int inverse(int a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }

  PointSet inverse(PointSet s) const noexcept;
  /// {a * b : a in lhs, b in rhs}
  PointSet product(PointSet lhs, PointSet rhs) const noexcept;
  PointSet left_translate(int g, PointSet s) const noexcept;
  PointSet right_translate(PointSet s, int g) const noexcept;

  std::optional<std::pair<int, int>> non_commuting_pair() const noexcept;
  bool is_abelian() const noexcept { return !non_commuting_pair(); }

  std::vector<std::vector<int>> table() const;

  /// Tables are compared; names are labels only.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::size_t index(int a, int b) const noexcept {
    return static_cast<std::size_t>(a * order_ + b);
  }

  int order_ = 0;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint8_t> inverse_;
  std::string name_;
};

FiniteGroup cyclic_group(int n);
/// Symmetries of the regular n-gon, order 2n; r^k s^f sits at k + n*f.
FiniteGroup dihedral_group(int n);
/// Permutations of {0..n-1} in lexicographic order, n <= 3.
FiniteGroup symmetric_group(int n);
/// Order 8: 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();
/// Pair (a, b) at index a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parses "cyclic(4)", "cyclic4", "dihedral(4)", "sym3", "symmetric(3)",
/// "quaternion8", "klein4", "direct_product(cyclic(2),cyclic(3))".
/// Throws unknown_spec or order_too_large.
FiniteGroup builtin_group(std::string_view spec);

/// The built-in fixture names with order <= max_order, in a fixed order.
std::vector<std::string> builtin_universe(int max_order = 8);

/// Subgroups as element sets, ascending by mask.
std::vector<PointSet> subgroups(const FiniteGroup& group);

bool is_subgroup(const FiniteGroup& group, PointSet s) noexcept;
bool is_normal_subgroup(const FiniteGroup& group, PointSet s) noexcept;

}  // namespace fintop
