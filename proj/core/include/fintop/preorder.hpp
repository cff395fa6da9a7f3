#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fintop/point_set.hpp"

namespace fintop {

/// A reflexive, transitive relation on {0, ..., n-1}. Row x holds the
/// up-set {y : x <= y}; the down-sets are kept alongside.
class Preorder {
 public:
  /// Throws not_reflexive / not_transitive / point_out_of_range.
  static Preorder from_rows(std::span<const PointSet> up);
  static std::optional<Preorder> try_from_rows(std::span<const PointSet> up);
  static Preorder from_matrix(const std::vector<std::vector<bool>>& matrix);
  static Preorder identity(int n);
  static Preorder total(int n);

  int size() const noexcept { return n_; }
  bool relates(int x, int y) const noexcept { return up_[x].contains(y); }
  PointSet up(int x) const noexcept { return up_[x]; }
  PointSet down(int x) const noexcept { return down_[x]; }
  bool is_symmetric() const noexcept;

  /// Row-major '0'/'1' rendering of the relation matrix. All enumeration
  /// orders in the library are increasing in this key.
  std::string key() const;

  /// The preorder with x relabelled as perm[x].
  Preorder relabel(std::span<const int> perm) const;

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  Preorder(int n, const std::array<PointSet, kMaxPoints>& up) noexcept;

  int n_ = 0;
  std::array<PointSet, kMaxPoints> up_{};
  std::array<PointSet, kMaxPoints> down_{};
};

}  // namespace fintop
