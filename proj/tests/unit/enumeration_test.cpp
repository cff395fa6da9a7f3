#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "common.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/error.hpp"
#include "fintop/group.hpp"
#include "fintop/space.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

std::vector<std::string> keys(const std::vector<FiniteSpace>& spaces) {
  std::vector<std::string> out;
  for (const FiniteSpace& s : spaces) out.push_back(s.key());
  return out;
}

std::size_t oracle_invariant_count(const FiniteGroup& g) {
  std::size_t count = 0;
  for (const oracle::Family& f : oracle::all_topologies(g.order())) {
    if (oracle::group_classes(g, f).semitopological) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("labeled counts match the family-filter oracle") {
  const std::vector<std::size_t> expected{1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    const std::vector<FiniteSpace> spaces = enumerate_topologies(n);
    CHECK(spaces.size() == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(oracle::all_topologies(n).size() == spaces.size());
    std::vector<oracle::Family> ours;
    for (const FiniteSpace& x : spaces) ours.push_back(oracle::family_of(x.opens()));
    std::sort(ours.begin(), ours.end());
    std::vector<oracle::Family> theirs = oracle::all_topologies(n);
    std::sort(theirs.begin(), theirs.end());
    CHECK(ours == theirs);
  }
  CHECK(enumerate_topologies(5).size() == 6942);
}

TEST_CASE("emissions are valid, distinct and strictly increasing") {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<FiniteSpace> spaces = enumerate_topologies(n);
    const std::vector<std::string> k = keys(spaces);
    CHECK(std::adjacent_find(k.begin(), k.end(), std::greater_equal<>()) == k.end());
    for (const FiniteSpace& x : spaces) {
      REQUIRE(validate_topology(n, x.opens()) == x);
      REQUIRE(space_from_preorder(specialization_preorder(x)) == x);
    }
  }
}

TEST_CASE("cursor is resumable and deterministic") {
  EnumerationCursor a = EnumerationCursor::all_preorders(3);
  EnumerationCursor b = EnumerationCursor::all_preorders(3);
  CHECK(a.position().empty());
  std::size_t count = 0;
  while (auto x = a.next()) {
    const auto y = b.next();
    REQUIRE(y.has_value());
    CHECK(x->key() == y->key());
    CHECK(a.position() == x->key());
    ++count;
  }
  CHECK(count == 29);
  CHECK(a.emitted() == 29);
  CHECK_FALSE(a.next().has_value());
  CHECK_FALSE(b.next().has_value());
  CHECK_THROWS_CODE(EnumerationCursor::all_preorders(6), ErrorCode::size_too_large);
  CHECK_THROWS_CODE(EnumerationCursor::all_preorders(0), ErrorCode::size_too_large);
}

TEST_CASE("shards merged by key equal the serial sequence") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::string> merged;
    for (PointSet row : shard_keys(n)) {
      const auto part = keys(enumerate_topologies_shard(n, row));
      merged.insert(merged.end(), part.begin(), part.end());
    }
    std::sort(merged.begin(), merged.end());
    CHECK(merged == keys(enumerate_topologies(n)));
  }
}

TEST_CASE("unlabeled classes match the orbit oracle") {
  const std::vector<std::size_t> expected{1, 3, 9, 33};
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_topologies(n);
    const auto classes = canonical_up_to_homeomorphism(all);
    CHECK(classes.size() == oracle::orbit_count(n));
    CHECK(classes.size() == expected[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(canonical_up_to_homeomorphism(enumerate_topologies(5)).size() == 139);
}

TEST_CASE("canonical representative is invariant under relabelling") {
  const FiniteSpace s = sierpinski_space();
  const std::vector<int> swap{1, 0};
  const FiniteSpace t = space_from_preorder(specialization_preorder(s).relabel(swap));
  CHECK(t != s);
  CHECK(canonical_representative(s) == canonical_representative(t));
  const std::vector<FiniteSpace> pair{s, t};
  CHECK(canonical_up_to_homeomorphism(pair).size() == 1);
}

TEST_CASE("shift-invariant enumeration matches filtering all topologies") {
  for (const std::string& name : {"cyclic2", "cyclic3", "cyclic4", "klein4"}) {
    const FiniteGroup g = builtin_group(name);
    CAPTURE(name);
    CHECK(enumerate_group_topologies(g).size() == oracle_invariant_count(g));
  }
  const auto z4 = enumerate_group_topologies(cyclic_group(4));
  REQUIRE(z4.size() == 3);
  std::vector<std::string> k;
  for (const auto& t : z4) k.push_back(t.value.space().key());
  CHECK(std::find(k.begin(), k.end(), discrete_space(4).key()) != k.end());
  CHECK(std::find(k.begin(), k.end(), antidiscrete_space(4).key()) != k.end());
  const std::vector<PointSet> coset{{}, {0, 2}, {1, 3}, {0, 1, 2, 3}};
  CHECK(std::find(k.begin(), k.end(), validate_topology(4, coset).key()) != k.end());
  CHECK(enumerate_group_topologies(cyclic_group(2)).size() == 2);
}

TEST_CASE("semitopological counts equal normal subgroup counts") {
  for (const std::string& name : builtin_universe()) {
    const FiniteGroup g = builtin_group(name);
    std::size_t normal = 0;
    for (PointSet h : subgroups(g)) normal += is_normal_subgroup(g, h);
    CAPTURE(name);
    CHECK(enumerate_group_topologies(g).size() == normal);
  }
}

TEST_CASE("filters") {
  const FiniteGroup s3 = symmetric_group(3);
  const auto semi = enumerate_group_topologies(s3);
  const auto top = enumerate_group_topologies(s3, {GroupClass::topological});
  CHECK(top.size() <= semi.size());
  for (const auto& t : top) {
    CHECK(std::any_of(semi.begin(), semi.end(),
                      [&](const GroupTopology& u) { return u.value.space() == t.value.space(); }));
  }
  const auto any = enumerate_group_topologies(cyclic_group(3), ClassFilter::parse("any"));
  CHECK(any.size() == 29);
  const auto raw = enumerate_group_topologies(cyclic_group(2), {GroupClass::almost_paratopological_raw});
  CHECK(raw.size() == 4);
  CHECK_THROWS_CODE(enumerate_group_topologies(symmetric_group(3), ClassFilter::parse("any")),
                    ErrorCode::order_too_large);
  CHECK_THROWS_CODE(ClassFilter::parse("bogus"), ErrorCode::parse_error);
  CHECK_THROWS_CODE(enumerate_group_topologies(direct_product(cyclic_group(2), cyclic_group(5))),
                    ErrorCode::order_too_large);
}

TEST_CASE("mine") {
  const MineResult semi = mine("semitopological-not-topological");
  CHECK(semi.none());
  CHECK(semi.expect_none);
  CHECK(semi.certificate().rfind("NONE up to", 0) == 0);
  CHECK(semi.population == 35);
  CHECK(mine("homogeneous-not-r0").none());
  CHECK(mine("homogeneous-not-r0").population == 1 + 4 + 29 + 355 + 6942);
  const MineResult r0 = mine("r0-not-t1", {8, 2});
  CHECK_FALSE(r0.none());
  CHECK(std::find(r0.witnesses.begin(), r0.witnesses.end(), "n=2 " + antidiscrete_space(2).key()) !=
        r0.witnesses.end());
  CHECK_THROWS_CODE(mine("nonsense"), ErrorCode::unknown_target);
  CHECK_THROWS_CODE(mine("homogeneous-not-r0", {8, 6}), ErrorCode::bounds_too_large);
}

}  // TEST_SUITE
