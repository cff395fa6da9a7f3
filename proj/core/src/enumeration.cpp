#include "fintop/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fintop/error.hpp"

namespace fintop {

namespace {

/// Row whose '0'/'1' rendering (column 0 first) reads as the binary number code.
PointSet row_from_code(int n, std::uint32_t code) noexcept {
  PointSet row;
  for (int j = 0; j < n; ++j) {
    if ((code >> (n - 1 - j)) & 1u) row.insert(j);
  }
  return row;
}

}  // namespace

EnumerationCursor EnumerationCursor::all_preorders(int n, std::optional<PointSet> first_row) {
  if (n < 1 || n > kMaxEnumerationPoints) {
    throw Error(ErrorCode::size_too_large,
                "enumeration supports 1.." + std::to_string(kMaxEnumerationPoints) + " points, got " +
                    std::to_string(n));
  }
  if (first_row && (!first_row->contains(0) || !first_row->subset_of(PointSet::full(n)))) {
    throw Error(ErrorCode::invalid_subset, "first row " + to_string(*first_row) + " is not a shard key");
  }
  EnumerationCursor c(n, Mode::all_preorders);
  for (int i = 0; i < n; ++i) {
    c.rel_[i] = PointSet::single(i);
    c.known_[i] = PointSet::single(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Cell cell{i, j, 0, 1};
      if (i == 0 && first_row) cell.lo = cell.hi = first_row->contains(j) ? 1 : 0;
      c.cells_.push_back(cell);
    }
  }
  c.values_.assign(c.cells_.size(), -1);
  return c;
}

EnumerationCursor EnumerationCursor::shift_invariant(const FiniteGroup& group) {
  if (group.order() > kMaxEnumerationOrder) {
    throw Error(ErrorCode::order_too_large, "exhaustive group enumeration supports order <= " +
                                                std::to_string(kMaxEnumerationOrder));
  }
  EnumerationCursor c(group.order(), Mode::shift_invariant_for_group);
  c.group_ = group;
  // Codes below 2^(n-1) leave the identity out of its own up-set.
  c.next_code_ = std::uint32_t{1} << (group.order() - 1);
  return c;
}

std::optional<FiniteSpace> EnumerationCursor::next() {
  std::optional<Preorder> order =
      mode_ == Mode::all_preorders ? next_preorder() : next_invariant();
  if (!order) return std::nullopt;
  position_ = order->key();
  ++emitted_;
  return FiniteSpace(std::move(*order));
}

bool EnumerationCursor::consistent(int i, int j, bool value) const noexcept {
  const auto fixed_true = [this](int a, int b) { return known_[a].contains(b) && rel_[a].contains(b); };
  const auto fixed_false = [this](int a, int b) { return known_[a].contains(b) && !rel_[a].contains(b); };
  for (int k = 0; k < n_; ++k) {
    if (!value) {
      // i <= k <= j forces i <= j.
      if (k != i && k != j && fixed_true(i, k) && fixed_true(k, j)) return false;
    } else {
      // i <= j <= k forces i <= k; k <= i <= j forces k <= j.
      if (k != j && fixed_true(j, k) && fixed_false(i, k)) return false;
      if (k != i && fixed_true(k, i) && fixed_false(k, j)) return false;
    }
  }
  return true;
}

std::optional<Preorder> EnumerationCursor::next_preorder() {
  if (done_) return std::nullopt;
  const std::size_t total = cells_.size();
  if (started_) {
    if (total == 0) {
      done_ = true;
      return std::nullopt;
    }
    pos_ = total - 1;
  }
  started_ = true;
  while (true) {
    if (pos_ == total) {
      return Preorder::from_rows(std::span(rel_.data(), static_cast<std::size_t>(n_)));
    }
    const Cell& cell = cells_[pos_];
    known_[cell.row].erase(cell.col);
    rel_[cell.row].erase(cell.col);
    int v = std::max(values_[pos_] + 1, cell.lo);
    while (v <= cell.hi && !consistent(cell.row, cell.col, v == 1)) ++v;
    if (v > cell.hi) {
      values_[pos_] = -1;
      if (pos_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      --pos_;
      continue;
    }
    values_[pos_] = v;
    known_[cell.row].insert(cell.col);
    if (v == 1) rel_[cell.row].insert(cell.col);
    ++pos_;
  }
}

std::optional<Preorder> EnumerationCursor::next_invariant() {
  const FiniteGroup& g = *group_;
  const std::uint32_t end = subset_count(n_);
  while (next_code_ < end) {
    const PointSet identity_row = row_from_code(n_, next_code_++);
    std::vector<PointSet> rows(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) rows[static_cast<std::size_t>(x)] = g.left_translate(x, identity_row);
    std::optional<Preorder> order = Preorder::try_from_rows(rows);
    if (!order) continue;
    bool right_invariant = true;
    for (int x = 0; x < n_ && right_invariant; ++x) {
      for (int s = 0; s < n_; ++s) {
        if (g.right_translate(order->up(x), s) != order->up(g.mul(x, s))) {
          right_invariant = false;
          break;
        }
      }
    }
    if (right_invariant) return order;
  }
  return std::nullopt;
}

void for_each_topology(int n, const std::function<void(const FiniteSpace&)>& visit) {
  EnumerationCursor cursor = EnumerationCursor::all_preorders(n);
  while (auto space = cursor.next()) visit(*space);
}

std::vector<FiniteSpace> enumerate_topologies(int n) {
  std::vector<FiniteSpace> out;
  for_each_topology(n, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

std::vector<PointSet> shard_keys(int n) {
  if (n < 1 || n > kMaxEnumerationPoints) {
    throw Error(ErrorCode::size_too_large, "no shards for " + std::to_string(n) + " points");
  }
  std::vector<PointSet> keys;
  for (std::uint32_t code = std::uint32_t{1} << (n - 1); code < subset_count(n); ++code) {
    keys.push_back(row_from_code(n, code));
  }
  return keys;
}

std::vector<FiniteSpace> enumerate_topologies_shard(int n, PointSet first_row) {
  EnumerationCursor cursor = EnumerationCursor::all_preorders(n, first_row);
  std::vector<FiniteSpace> out;
  while (auto space = cursor.next()) out.push_back(std::move(*space));
  return out;
}

ClassFilter ClassFilter::parse(std::string_view csv) {
  ClassFilter filter;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view name = csv.substr(start, end - start);
    if (name == "semitopological") filter.bits_ |= static_cast<unsigned>(GroupClass::semitopological);
    else if (name == "quasitopological") filter.bits_ |= static_cast<unsigned>(GroupClass::quasitopological);
    else if (name == "paratopological") filter.bits_ |= static_cast<unsigned>(GroupClass::paratopological);
    else if (name == "topological") filter.bits_ |= static_cast<unsigned>(GroupClass::topological);
    else if (name == "almost_paratopological") filter.bits_ |= static_cast<unsigned>(GroupClass::almost_paratopological);
    else if (name == "almost_paratopological_raw") filter.bits_ |= static_cast<unsigned>(GroupClass::almost_paratopological_raw);
    else if (!name.empty() && name != "any") {
      throw Error(ErrorCode::parse_error, "unknown class '" + std::string(name) + "'");
    }
    start = end + 1;
  }
  return filter;
}

bool ClassFilter::accepts(const ClassProfile& p) const noexcept {
  return (!requires_class(GroupClass::semitopological) || p.semitopological) &&
         (!requires_class(GroupClass::quasitopological) || p.quasitopological) &&
         (!requires_class(GroupClass::paratopological) || p.paratopological) &&
         (!requires_class(GroupClass::topological) || p.topological) &&
         (!requires_class(GroupClass::almost_paratopological) || p.almost_paratopological()) &&
         (!requires_class(GroupClass::almost_paratopological_raw) || p.almost_paratopological_raw);
}

std::vector<GroupTopology> enumerate_group_topologies(const FiniteGroup& group, ClassFilter filter) {
  EnumerationCursor cursor = [&] {
    if (filter.implies_semitopological()) return EnumerationCursor::shift_invariant(group);
    if (group.order() > kMaxEnumerationPoints) {
      throw Error(ErrorCode::order_too_large,
                  "filters that admit non-semitopological topologies need order <= " +
                      std::to_string(kMaxEnumerationPoints));
    }
    return EnumerationCursor::all_preorders(group.order());
  }();
  std::vector<GroupTopology> out;
  while (auto space = cursor.next()) {
    GroupWithTopology value(group, std::move(*space));
    const ClassProfile profile = class_profile(value);
    if (filter.accepts(profile)) out.push_back(GroupTopology{std::move(value), profile});
  }
  return out;
}

FiniteSpace canonical_representative(const FiniteSpace& space) {
  const Preorder& order = space.specialization();
  std::vector<int> perm(static_cast<std::size_t>(space.size()));
  std::iota(perm.begin(), perm.end(), 0);
  Preorder best = order;
  std::string best_key = order.key();
  while (std::next_permutation(perm.begin(), perm.end())) {
    Preorder candidate = order.relabel(perm);
    std::string key = candidate.key();
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  }
  return FiniteSpace(std::move(best));
}

std::vector<FiniteSpace> canonical_up_to_homeomorphism(std::span<const FiniteSpace> spaces) {
  std::set<std::string> seen;
  std::vector<FiniteSpace> out;
  for (const FiniteSpace& s : spaces) {
    FiniteSpace rep = canonical_representative(s);
    if (seen.insert(std::to_string(rep.size()) + ":" + rep.key()).second) out.push_back(std::move(rep));
  }
  return out;
}

std::string MineResult::certificate() const {
  if (none()) {
    return "NONE up to " + universe + "; scanned " + std::to_string(population);
  }
  return std::to_string(witnesses.size()) + " witness(es) in " + universe + "; scanned " +
         std::to_string(population);
}

namespace {

enum class Universe { groups, spaces };

struct Target {
  const char* name;
  Universe universe;
  bool expect_none;
  bool (*group_predicate)(const ClassProfile&);
  bool (*space_predicate)(const FiniteSpace&);
};

const Target kTargets[] = {
    {"semitopological-not-topological", Universe::groups, true,
     [](const ClassProfile& p) { return p.semitopological && !p.topological; }, nullptr},
    {"almost-paratopological-not-topological", Universe::groups, true,
     [](const ClassProfile& p) { return p.almost_paratopological() && !p.topological; }, nullptr},
    {"paratopological-not-topological", Universe::groups, true,
     [](const ClassProfile& p) { return p.paratopological && !p.topological; }, nullptr},
    {"homogeneous-not-r0", Universe::spaces, true, nullptr,
     [](const FiniteSpace& s) {
       return is_homogeneous(s).homogeneous && !separation_profile(s).r0;
     }},
    {"r0-not-t1", Universe::spaces, false, nullptr,
     [](const FiniteSpace& s) {
       const SeparationProfile p = separation_profile(s);
       return p.r0 && !p.t1;
     }},
};

}  // namespace

std::vector<std::string> mine_targets() {
  std::vector<std::string> out;
  for (const Target& t : kTargets) out.emplace_back(t.name);
  return out;
}

MineResult mine(std::string_view target, const MineBounds& bounds) {
  const auto it = std::find_if(std::begin(kTargets), std::end(kTargets),
                               [&](const Target& t) { return target == t.name; });
  if (it == std::end(kTargets)) {
    throw Error(ErrorCode::unknown_target, "'" + std::string(target) + "'");
  }
  MineResult result;
  result.target = it->name;
  result.expect_none = it->expect_none;
  if (it->universe == Universe::groups) {
    if (bounds.max_order < 1 || bounds.max_order > kMaxEnumerationOrder) {
      throw Error(ErrorCode::bounds_too_large, "max order must be within 1..8");
    }
    const std::vector<std::string> names = builtin_universe(bounds.max_order);
    result.universe = "semitopological topologies on " + std::to_string(names.size()) +
                      " built-in groups of order <= " + std::to_string(bounds.max_order);
    for (const std::string& name : names) {
      for (const GroupTopology& t : enumerate_group_topologies(builtin_group(name))) {
        ++result.population;
        if (it->group_predicate(t.profile)) {
          result.witnesses.push_back("group=" + name + " topology=" + t.value.space().key());
        }
      }
    }
  } else {
    if (bounds.max_points < 1 || bounds.max_points > kMaxEnumerationPoints) {
      throw Error(ErrorCode::bounds_too_large, "max points must be within 1..5");
    }
    result.universe = "labeled spaces on 1.." + std::to_string(bounds.max_points) + " points";
    for (int n = 1; n <= bounds.max_points; ++n) {
      for_each_topology(n, [&](const FiniteSpace& s) {
        ++result.population;
        if (it->space_predicate(s)) result.witnesses.push_back("n=" + std::to_string(n) + " " + s.key());
      });
    }
  }
  return result;
}

}  // namespace fintop
