#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fintop/point_set.hpp"
#include "fintop/preorder.hpp"

namespace fintop {

/// A topology on a carrier of 1..16 points.
///
/// The canonical state is the specialization preorder (x <= y iff x lies in
/// the closure of {y}). Opens are exactly the up-closed sets; the full list
/// is derived on first request and shared between copies.
class FiniteSpace {
 public:
  explicit FiniteSpace(Preorder order);

  int size() const noexcept { return order_.size(); }
  PointSet carrier() const noexcept { return PointSet::full(size()); }
  const Preorder& specialization() const noexcept { return order_; }

  bool precedes(int x, int y) const noexcept { return order_.relates(x, y); }
  /// Smallest open set containing x.
  PointSet min_open(int x) const noexcept { return order_.up(x); }
  /// cl{x}.
  PointSet point_closure(int x) const noexcept { return order_.down(x); }

  bool is_open(PointSet s) const noexcept;
  bool is_closed(PointSet s) const noexcept { return closure(s) == s; }
  PointSet closure(PointSet s) const noexcept;
  PointSet interior(PointSet s) const noexcept;

  /// All open sets, ascending by bit mask. Thread-safe.
  const std::vector<PointSet>& opens() const;

  std::string key() const { return order_.key(); }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) noexcept {
    return a.order_ == b.order_;
  }

 private:
  struct OpensCache;

  Preorder order_;
  std::shared_ptr<OpensCache> cache_;
};

/// Checks that `opens` is a topology on n points and canonicalizes it.
FiniteSpace validate_topology(int point_count, std::span<const PointSet> opens);

FiniteSpace space_from_preorder(const Preorder& order);
Preorder specialization_preorder(const FiniteSpace& space);

FiniteSpace discrete_space(int n);
FiniteSpace antidiscrete_space(int n);
/// Opens {}, {1}, {0,1}.
FiniteSpace sierpinski_space();

struct SeparationProfile {
  bool t0 = false;
  bool t1 = false;
  bool r0 = false;
  bool antidiscrete = false;
  bool discrete = false;
  bool hausdorff = false;

  friend bool operator==(const SeparationProfile&, const SeparationProfile&) = default;
};

SeparationProfile separation_profile(const FiniteSpace& space);

/// Product with pair (x, y) at index x * |Y| + y. Throws carrier_too_large
/// past 16 points.
FiniteSpace product(const FiniteSpace& x, const FiniteSpace& y);

/// Subspace on the members of s, renumbered in increasing order.
FiniteSpace subspace(const FiniteSpace& space, PointSet s);

struct HomogeneityResult {
  bool homogeneous = false;
  /// When requested and homogeneous: witnesses[y] is a self-homeomorphism
  /// (as a permutation table) sending 0 to y.
  std::vector<std::vector<int>> witnesses;
};

/// Transitivity of the self-homeomorphism group. Limited to 7 points.
HomogeneityResult is_homogeneous(const FiniteSpace& space, bool want_witnesses = false);

/// Backtracking search for a preorder automorphism with from -> to.
std::optional<std::vector<int>> find_automorphism(const Preorder& order, int from, int to);

}  // namespace fintop
