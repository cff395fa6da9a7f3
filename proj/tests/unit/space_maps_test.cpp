#include <set>
#include <vector>

#include "common.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/error.hpp"
#include "fintop/quotient.hpp"
#include "fintop/space.hpp"
#include "fintop/space_map.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

// Literal definition: surjective, continuous, open, closed, and for every
// subset U, U is open iff U = f^{-1}(f(U)) and f(U) is open.
bool preserves_oracle(const SpaceMap& f) {
  const int n = f.domain().size();
  const int m = f.codomain().size();
  const unsigned nfull = (1u << n) - 1u;
  const unsigned mfull = (1u << m) - 1u;
  std::set<unsigned> dom;
  for (PointSet u : f.domain().opens()) dom.insert(u.bits());
  std::set<unsigned> cod;
  for (PointSet u : f.codomain().opens()) cod.insert(u.bits());
  auto image = [&](unsigned s) {
    unsigned out = 0;
    for (int x = 0; x < n; ++x) {
      if ((s >> x) & 1u) out |= 1u << f(x);
    }
    return out;
  };
  auto preimage = [&](unsigned v) {
    unsigned out = 0;
    for (int x = 0; x < n; ++x) {
      if ((v >> f(x)) & 1u) out |= 1u << x;
    }
    return out;
  };
  if (image(nfull) != mfull) return false;
  for (unsigned v : cod) {
    if (!dom.contains(preimage(v))) return false;
  }
  for (unsigned u : dom) {
    if (!cod.contains(image(u))) return false;
    if (!cod.contains(mfull & ~image(nfull & ~u))) return false;
  }
  for (unsigned s = 0; s <= nfull; ++s) {
    const bool rhs = preimage(image(s)) == s && cod.contains(image(s));
    if (dom.contains(s) != rhs) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("space-maps") {

TEST_CASE("map construction is validated") {
  CHECK_THROWS_CODE(SpaceMap(discrete_space(2), discrete_space(1), {0}), ErrorCode::invalid_map);
  CHECK_THROWS_CODE(SpaceMap(discrete_space(2), discrete_space(1), {0, 1}), ErrorCode::invalid_map);
}

TEST_CASE("map_profile fixtures") {
  CHECK(map_profile(SpaceMap::identity(sierpinski_space())).all());
  CHECK(map_profile(SpaceMap(discrete_space(2), discrete_space(1), {0, 0})).all());
  const SpaceMap incl(discrete_space(1), sierpinski_space(), {1});
  const MapProfile p = map_profile(incl);
  CHECK(p.continuous);
  CHECK_FALSE(p.closed_map);
  CHECK_FALSE(p.surjective);
}

TEST_CASE("preserves_topology fixtures") {
  CHECK(preserves_topology(t0_quotient(antidiscrete_space(3)).projection));
  CHECK(preserves_topology(SpaceMap::identity(sierpinski_space())));
  const SpaceMap collapse(sierpinski_space(), discrete_space(1), {0, 0});
  CHECK_FALSE(preserves_topology(collapse));
  CHECK_FALSE(preserves_oracle(collapse));
}

TEST_CASE("preservation_equivalence fixtures") {
  const PreservationReport id = preservation_equivalence(SpaceMap::identity(sierpinski_space()));
  CHECK((id.preserves && id.pullback_bijective && id.quotient_antidiscrete && id.all_agree));
  const PreservationReport c = preservation_equivalence(SpaceMap(sierpinski_space(), discrete_space(1), {0, 0}));
  CHECK_FALSE(c.preserves);
  CHECK_FALSE(c.pullback_bijective);
  CHECK_FALSE(c.quotient_antidiscrete);
  CHECK(c.all_agree);
  const SpaceMap into(discrete_space(1), discrete_space(2), {0});
  CHECK_THROWS_CODE(preservation_equivalence(into), ErrorCode::not_surjective);
}

TEST_CASE("compose and image/preimage") {
  const SpaceMap f(discrete_space(3), discrete_space(2), {0, 1, 1});
  const SpaceMap g(discrete_space(2), discrete_space(1), {0, 0});
  const SpaceMap h = compose(g, f);
  CHECK(h(2) == 0);
  CHECK(f.image({1, 2}) == PointSet{1});
  CHECK(f.preimage({1}) == PointSet{1, 2});
}

TEST_CASE("surjections between spaces of up to 3 points agree with the definition oracle") {
  std::vector<FiniteSpace> spaces;
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSpace& x : enumerate_topologies(n)) spaces.push_back(x);
  }
  std::size_t maps = 0;
  for (const FiniteSpace& x : spaces) {
    for (const FiniteSpace& y : spaces) {
      const int n = x.size();
      const int m = y.size();
      if (m > n) continue;
      std::vector<int> t(static_cast<std::size_t>(n), 0);
      while (true) {
        PointSet hit;
        for (int v : t) hit.insert(v);
        if (hit == y.carrier()) {
          const SpaceMap f(x, y, t);
          const PreservationReport r = preservation_equivalence(f);
          REQUIRE(r.all_agree);
          REQUIRE(r.preserves == preserves_oracle(f));
          REQUIRE(preserves_topology(f) == r.preserves);
          if (r.preserves) REQUIRE(map_profile(f).all());
          ++maps;
        }
        int i = 0;
        while (i < n && ++t[static_cast<std::size_t>(i)] == m) t[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
      }
    }
  }
  CHECK(maps > 0);
}

TEST_CASE("continuity is monotonicity") {
  for (const FiniteSpace& x : enumerate_topologies(3)) {
    for (const FiniteSpace& y : enumerate_topologies(2)) {
      for (unsigned code = 0; code < 8; ++code) {
        const std::vector<int> t{int(code & 1u), int((code >> 1) & 1u), int((code >> 2) & 1u)};
        const SpaceMap f(x, y, t);
        bool preimages_open = true;
        for (PointSet v : y.opens()) preimages_open = preimages_open && x.is_open(f.preimage(v));
        REQUIRE(map_profile(f).continuous == preimages_open);
      }
    }
  }
}

}  // TEST_SUITE
