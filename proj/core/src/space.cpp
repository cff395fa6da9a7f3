#include "fintop/space.hpp"

#include <algorithm>
#include <mutex>

#include "fintop/error.hpp"

namespace fintop {

struct FiniteSpace::OpensCache {
  std::once_flag once;
  std::vector<PointSet> opens;
};

FiniteSpace::FiniteSpace(Preorder order)
    : order_(std::move(order)), cache_(std::make_shared<OpensCache>()) {}

bool FiniteSpace::is_open(PointSet s) const noexcept {
  for (int x : s) {
    if (!order_.up(x).subset_of(s)) return false;
  }
  return true;
}

PointSet FiniteSpace::closure(PointSet s) const noexcept {
  PointSet out;
  for (int x : s) out |= order_.down(x);
  return out;
}

PointSet FiniteSpace::interior(PointSet s) const noexcept {
  PointSet out;
  for (int x : s) {
    if (order_.up(x).subset_of(s)) out.insert(x);
  }
  return out;
}

const std::vector<PointSet>& FiniteSpace::opens() const {
  std::call_once(cache_->once, [this] {
    const std::uint32_t count = subset_count(size());
    for (std::uint32_t bits = 0; bits < count; ++bits) {
      const PointSet s = PointSet::from_bits(bits);
      if (is_open(s)) cache_->opens.push_back(s);
    }
  });
  return cache_->opens;
}

namespace {

void check_point_count(int n) {
  if (n < 1) throw Error(ErrorCode::empty_carrier, "a space needs at least one point");
  if (n > kMaxPoints) {
    throw Error(ErrorCode::carrier_too_large,
                std::to_string(n) + " points exceeds " + std::to_string(kMaxPoints));
  }
}

std::uint64_t count_up_closed(const std::array<PointSet, kMaxPoints>& up, int n) {
  std::uint64_t count = 0;
  const std::uint32_t total = subset_count(n);
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    const PointSet s = PointSet::from_bits(bits);
    bool closed = true;
    for (int x : s) {
      if (!up[x].subset_of(s)) {
        closed = false;
        break;
      }
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace

FiniteSpace validate_topology(int point_count, std::span<const PointSet> opens) {
  check_point_count(point_count);
  const PointSet carrier = PointSet::full(point_count);
  std::vector<PointSet> family(opens.begin(), opens.end());
  for (PointSet u : family) {
    if (!u.subset_of(carrier)) {
      throw Error(ErrorCode::point_out_of_range, to_string(u) + " is not within the carrier", {u});
    }
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (!std::binary_search(family.begin(), family.end(), PointSet{}) ||
      !std::binary_search(family.begin(), family.end(), carrier)) {
    throw Error(ErrorCode::missing_empty_or_full, "opens must contain {} and the carrier");
  }

  // min_open(x) is the intersection of the listed sets containing x. The
  // family is always inside the up-closed sets of that preorder, so it is a
  // topology exactly when the two have the same size.
  std::array<PointSet, kMaxPoints> up{};
  for (int x = 0; x < point_count; ++x) {
    up[x] = carrier;
    for (PointSet u : family) {
      if (u.contains(x)) up[x] &= u;
    }
  }
  if (count_up_closed(up, point_count) != family.size()) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        const PointSet a = family[i];
        const PointSet b = family[j];
        if (!std::binary_search(family.begin(), family.end(), a | b)) {
          throw Error(ErrorCode::not_closed_under_union, to_string(a) + " | " + to_string(b), {a, b});
        }
        if (!std::binary_search(family.begin(), family.end(), a & b)) {
          throw Error(ErrorCode::not_closed_under_intersection, to_string(a) + " & " + to_string(b),
                      {a, b});
        }
      }
    }
  }
  return FiniteSpace(Preorder::from_rows(std::span(up.data(), static_cast<std::size_t>(point_count))));
}

FiniteSpace space_from_preorder(const Preorder& order) { return FiniteSpace(order); }

Preorder specialization_preorder(const FiniteSpace& space) { return space.specialization(); }

FiniteSpace discrete_space(int n) {
  check_point_count(n);
  return FiniteSpace(Preorder::identity(n));
}

FiniteSpace antidiscrete_space(int n) {
  check_point_count(n);
  return FiniteSpace(Preorder::total(n));
}

FiniteSpace sierpinski_space() {
  const PointSet rows[] = {PointSet{0, 1}, PointSet{1}};
  return FiniteSpace(Preorder::from_rows(rows));
}

SeparationProfile separation_profile(const FiniteSpace& space) {
  SeparationProfile p;
  p.t0 = p.t1 = p.r0 = p.antidiscrete = p.discrete = p.hausdorff = true;
  const int n = space.size();
  const PointSet carrier = space.carrier();
  for (int x = 0; x < n; ++x) {
    const PointSet up = space.min_open(x);
    const PointSet down = space.point_closure(x);
    const PointSet single = PointSet::single(x);
    if ((up & down) != single) p.t0 = false;
    if (down != single) p.t1 = false;
    if (up != down) p.r0 = false;
    if (up != carrier) p.antidiscrete = false;
    if (up != single) p.discrete = false;
    for (int y = x + 1; y < n; ++y) {
      if (up.intersects(space.min_open(y))) p.hausdorff = false;
    }
  }
  return p;
}

FiniteSpace product(const FiniteSpace& x, const FiniteSpace& y) {
  const int m = y.size();
  const int total = x.size() * m;
  if (total > kMaxPoints) {
    throw Error(ErrorCode::carrier_too_large,
                "product has " + std::to_string(total) + " points");
  }
  std::vector<PointSet> rows(static_cast<std::size_t>(total));
  for (int a = 0; a < x.size(); ++a) {
    for (int b = 0; b < m; ++b) {
      PointSet row;
      for (int c : x.min_open(a)) {
        for (int d : y.min_open(b)) row.insert(c * m + d);
      }
      rows[static_cast<std::size_t>(a * m + b)] = row;
    }
  }
  return FiniteSpace(Preorder::from_rows(rows));
}

FiniteSpace subspace(const FiniteSpace& space, PointSet s) {
  if (s.empty()) throw Error(ErrorCode::invalid_subset, "subspace of the empty set");
  if (!s.subset_of(space.carrier())) {
    throw Error(ErrorCode::point_out_of_range, to_string(s) + " is not within the carrier", {s});
  }
  const std::vector<int> points = s.to_vector();
  std::array<int, kMaxPoints> position{};
  for (std::size_t i = 0; i < points.size(); ++i) position[points[i]] = static_cast<int>(i);
  std::vector<PointSet> rows(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int y : space.min_open(points[i]) & s) rows[i].insert(position[y]);
  }
  return FiniteSpace(Preorder::from_rows(rows));
}

namespace {

struct AutomorphismSearch {
  const Preorder& order;
  int n;
  std::array<int, kMaxPoints> image{};
  PointSet used;
  std::vector<int> sequence;  // assignment order

  bool compatible(int x, int a, std::size_t depth) const noexcept {
    if (order.up(x).size() != order.up(a).size() || order.down(x).size() != order.down(a).size()) {
      return false;
    }
    for (std::size_t k = 0; k < depth; ++k) {
      const int y = sequence[k];
      const int b = image[y];
      if (order.relates(x, y) != order.relates(a, b) || order.relates(y, x) != order.relates(b, a)) {
        return false;
      }
    }
    return order.relates(x, x) == order.relates(a, a);
  }

  bool extend(std::size_t depth) {
    if (depth == sequence.size()) return true;
    const int x = sequence[depth];
    for (int a = 0; a < n; ++a) {
      if (used.contains(a) || !compatible(x, a, depth)) continue;
      image[x] = a;
      used.insert(a);
      if (extend(depth + 1)) return true;
      used.erase(a);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_automorphism(const Preorder& order, int from, int to) {
  const int n = order.size();
  AutomorphismSearch search{order, n, {}, {}, {}};
  search.sequence.push_back(from);
  for (int x = 0; x < n; ++x) {
    if (x != from) search.sequence.push_back(x);
  }
  if (!search.compatible(from, to, 0)) return std::nullopt;
  search.image[from] = to;
  search.used.insert(to);
  if (!search.extend(1)) return std::nullopt;
  return std::vector<int>(search.image.begin(), search.image.begin() + n);
}

HomogeneityResult is_homogeneous(const FiniteSpace& space, bool want_witnesses) {
  constexpr int kSearchLimit = 7;
  if (space.size() > kSearchLimit) {
    throw Error(ErrorCode::carrier_too_large_for_search,
                std::to_string(space.size()) + " points exceeds " + std::to_string(kSearchLimit));
  }
  HomogeneityResult result;
  for (int y = 0; y < space.size(); ++y) {
    auto witness = find_automorphism(space.specialization(), 0, y);
    if (!witness) {
      result.witnesses.clear();
      return result;
    }
    if (want_witnesses) result.witnesses.push_back(std::move(*witness));
  }
  result.homogeneous = true;
  return result;
}

}  // namespace fintop
