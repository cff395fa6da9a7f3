#include "fintop/preorder.hpp"

#include "fintop/error.hpp"

namespace fintop {

Preorder::Preorder(int n, const std::array<PointSet, kMaxPoints>& up) noexcept : n_(n), up_(up) {
  for (int x = 0; x < n_; ++x) {
    for (int y : up_[x]) down_[y].insert(x);
  }
}

std::optional<Preorder> Preorder::try_from_rows(std::span<const PointSet> up) {
  const int n = static_cast<int>(up.size());
  if (n < 1 || n > kMaxPoints) return std::nullopt;
  const PointSet carrier = PointSet::full(n);
  std::array<PointSet, kMaxPoints> rows{};
  for (int x = 0; x < n; ++x) {
    if (!up[x].subset_of(carrier) || !up[x].contains(x)) return std::nullopt;
    rows[x] = up[x];
  }
  for (int x = 0; x < n; ++x) {
    for (int y : rows[x]) {
      if (!rows[y].subset_of(rows[x])) return std::nullopt;
    }
  }
  return Preorder(n, rows);
}

Preorder Preorder::from_rows(std::span<const PointSet> up) {
  const int n = static_cast<int>(up.size());
  if (n < 1) throw Error(ErrorCode::empty_carrier, "preorder needs at least one point");
  if (n > kMaxPoints) {
    throw Error(ErrorCode::carrier_too_large, std::to_string(n) + " points");
  }
  const PointSet carrier = PointSet::full(n);
  for (int x = 0; x < n; ++x) {
    if (!up[x].subset_of(carrier)) {
      throw Error(ErrorCode::point_out_of_range, "row " + std::to_string(x) + " = " + to_string(up[x]));
    }
    if (!up[x].contains(x)) {
      throw Error(ErrorCode::not_reflexive, "point " + std::to_string(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y : up[x]) {
      const PointSet missing = up[y] - up[x];
      if (!missing.empty()) {
        throw Error(ErrorCode::not_transitive, std::to_string(x) + " <= " + std::to_string(y) +
                                                   " <= " + std::to_string(missing.first()));
      }
    }
  }
  std::array<PointSet, kMaxPoints> rows{};
  for (int x = 0; x < n; ++x) rows[x] = up[x];
  return Preorder(n, rows);
}

Preorder Preorder::from_matrix(const std::vector<std::vector<bool>>& matrix) {
  std::vector<PointSet> rows(matrix.size());
  for (std::size_t x = 0; x < matrix.size(); ++x) {
    if (matrix[x].size() != matrix.size()) {
      throw Error(ErrorCode::point_out_of_range, "matrix is not square");
    }
    for (std::size_t y = 0; y < matrix[x].size(); ++y) {
      if (matrix[x][y]) rows[x].insert(static_cast<int>(y));
    }
  }
  return from_rows(rows);
}

Preorder Preorder::identity(int n) {
  std::vector<PointSet> rows;
  for (int x = 0; x < n; ++x) rows.push_back(PointSet::single(x));
  return from_rows(rows);
}

Preorder Preorder::total(int n) {
  return from_rows(std::vector<PointSet>(static_cast<std::size_t>(n), PointSet::full(n)));
}

bool Preorder::is_symmetric() const noexcept {
  for (int x = 0; x < n_; ++x) {
    if (up_[x] != down_[x]) return false;
  }
  return true;
}

std::string Preorder::key() const {
  std::string out(static_cast<std::size_t>(n_ * n_), '0');
  for (int x = 0; x < n_; ++x) {
    for (int y : up_[x]) out[static_cast<std::size_t>(x * n_ + y)] = '1';
  }
  return out;
}

Preorder Preorder::relabel(std::span<const int> perm) const {
  std::array<PointSet, kMaxPoints> rows{};
  for (int x = 0; x < n_; ++x) {
    for (int y : up_[x]) rows[perm[x]].insert(perm[y]);
  }
  return Preorder(n_, rows);
}

}  // namespace fintop
