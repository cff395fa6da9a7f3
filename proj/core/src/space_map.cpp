#include "fintop/space_map.hpp"

#include <algorithm>

#include "fintop/error.hpp"

namespace fintop {

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != domain_.size()) {
    throw Error(ErrorCode::invalid_map, "table has " + std::to_string(table_.size()) +
                                            " entries for a domain of " +
                                            std::to_string(domain_.size()) + " points");
  }
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] < 0 || table_[x] >= codomain_.size()) {
      throw Error(ErrorCode::invalid_map, "image of " + std::to_string(x) + " is " +
                                              std::to_string(table_[x]) + ", outside the codomain");
    }
  }
}

SpaceMap SpaceMap::identity(const FiniteSpace& space) {
  std::vector<int> table(static_cast<std::size_t>(space.size()));
  for (int x = 0; x < space.size(); ++x) table[static_cast<std::size_t>(x)] = x;
  return SpaceMap(space, space, std::move(table));
}

PointSet SpaceMap::image(PointSet s) const noexcept {
  PointSet out;
  for (int x : s) out.insert((*this)(x));
  return out;
}

PointSet SpaceMap::preimage(PointSet s) const noexcept {
  PointSet out;
  for (int x = 0; x < domain_.size(); ++x) {
    if (s.contains((*this)(x))) out.insert(x);
  }
  return out;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw Error(ErrorCode::invalid_map, "maps do not compose");
  }
  std::vector<int> table;
  for (int x : f.table()) table.push_back(g(x));
  return SpaceMap(f.domain(), g.codomain(), std::move(table));
}

namespace {

bool monotone(const SpaceMap& f) noexcept {
  const FiniteSpace& dom = f.domain();
  const FiniteSpace& cod = f.codomain();
  for (int x = 0; x < dom.size(); ++x) {
    if (!f.image(dom.min_open(x)).subset_of(cod.min_open(f(x)))) return false;
  }
  return true;
}

bool surjective(const SpaceMap& f) noexcept {
  return f.image(f.domain().carrier()) == f.codomain().carrier();
}

}  // namespace

MapProfile map_profile(const SpaceMap& f) {
  const FiniteSpace& dom = f.domain();
  const FiniteSpace& cod = f.codomain();
  MapProfile p;
  p.surjective = surjective(f);
  p.continuous = monotone(f);
  // Opens are unions of minimal opens and closed sets unions of point
  // closures, and images commute with unions.
  p.open_map = true;
  p.closed_map = true;
  for (int x = 0; x < dom.size(); ++x) {
    if (!cod.is_open(f.image(dom.min_open(x)))) p.open_map = false;
    if (!cod.is_closed(f.image(dom.point_closure(x)))) p.closed_map = false;
  }
  p.quotient_map = p.surjective && p.continuous;
  if (p.quotient_map) {
    const std::uint32_t count = subset_count(cod.size());
    for (std::uint32_t bits = 0; bits < count; ++bits) {
      const PointSet v = PointSet::from_bits(bits);
      if (dom.is_open(f.preimage(v)) && !cod.is_open(v)) {
        p.quotient_map = false;
        break;
      }
    }
  }
  return p;
}

bool preserves_topology(const SpaceMap& f) {
  const MapProfile p = map_profile(f);
  if (!(p.surjective && p.continuous && p.open_map && p.closed_map)) return false;
  const FiniteSpace& dom = f.domain();
  const FiniteSpace& cod = f.codomain();
  const std::uint32_t count = subset_count(dom.size());
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const PointSet u = PointSet::from_bits(bits);
    const PointSet image = f.image(u);
    const bool rhs = f.preimage(image) == u && cod.is_open(image);
    if (dom.is_open(u) != rhs) return false;
  }
  return true;
}

bool is_homeomorphism(const SpaceMap& f) {
  const FiniteSpace& dom = f.domain();
  const FiniteSpace& cod = f.codomain();
  if (dom.size() != cod.size() || !surjective(f)) return false;
  for (int x = 0; x < dom.size(); ++x) {
    for (int y = 0; y < dom.size(); ++y) {
      if (dom.precedes(x, y) != cod.precedes(f(x), f(y))) return false;
    }
  }
  return true;
}

PreservationReport preservation_equivalence(const SpaceMap& f) {
  if (!surjective(f)) throw Error(ErrorCode::not_surjective, "map is not onto its codomain");
  const FiniteSpace& dom = f.domain();
  const FiniteSpace& cod = f.codomain();

  PreservationReport r;
  r.preserves = preserves_topology(f);

  std::vector<PointSet> pulled;
  for (PointSet v : cod.opens()) pulled.push_back(f.preimage(v));
  std::sort(pulled.begin(), pulled.end());
  const bool injective = std::adjacent_find(pulled.begin(), pulled.end()) == pulled.end();
  r.pullback_bijective = injective && pulled == dom.opens();

  bool fibers_antidiscrete = true;
  for (int y = 0; y < cod.size(); ++y) {
    const FiniteSpace fiber = subspace(dom, f.preimage(PointSet::single(y)));
    if (!separation_profile(fiber).antidiscrete) fibers_antidiscrete = false;
  }
  r.quotient_antidiscrete = map_profile(f).quotient_map && fibers_antidiscrete;

  r.all_agree = r.preserves == r.pullback_bijective && r.pullback_bijective == r.quotient_antidiscrete;
  return r;
}

}  // namespace fintop
