#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shardfan/builders.hpp"
#include "shardfan/shards.hpp"
#include "test_util.hpp"

#include <set>

using namespace shardfan;
using namespace shardfan::testing;

namespace {

std::set<std::vector<IntVec>> shard_wall_sets(const FanGeometry& geom,
                                              const std::vector<Shard>& shards) {
  std::set<std::vector<IntVec>> out;
  for (const auto& s : shards) {
    std::vector<IntVec> walls;
    for (int w : s.walls) {
      std::vector<IntVec> rays;
      for (int idx : geom.face(geom.wall(w).face).rays) rays.push_back(geom.fan().rays[idx]);
      std::sort(rays.begin(), rays.end());
      IntVec flat;
      for (auto& r : rays) flat.insert(flat.end(), r.begin(), r.end());
      walls.push_back(std::move(flat));
    }
    std::sort(walls.begin(), walls.end());
    out.insert(std::move(walls));
  }
  return out;
}

}  // namespace

TEST_CASE("papera2 plates") {
  Built b = build(gen_papera2());
  auto plates = compute_plates(b.geom);
  REQUIRE(plates.size() == 3);
  // ordered by normal: (0,1) = x-axis line, (1,0) = y-axis line, (1,1) = the single ray
  CHECK(plates[0].hyperplane.normal == iv({0, 1}));
  CHECK(plates[0].walls == std::vector<int>{wall_by_rays(b.geom, {iv({1, 0})}),
                                            wall_by_rays(b.geom, {iv({-1, 0})})});
  CHECK(plates[1].hyperplane.normal == iv({1, 0}));
  CHECK(plates[1].walls == std::vector<int>{wall_by_rays(b.geom, {iv({0, 1})}),
                                            wall_by_rays(b.geom, {iv({0, -1})})});
  CHECK(plates[2].hyperplane.normal == iv({1, 1}));
  CHECK(plates[2].walls == std::vector<int>{wall_by_rays(b.geom, {iv({1, -1})})});
}

TEST_CASE("cutting rule at the origin of papera2") {
  Built b = build(gen_papera2());
  auto plates = compute_plates(b.geom);
  const int origin = face_by_rays(b.geom, {});
  // the axis plates hold basic walls of the global extremes: uncut
  CHECK_FALSE(is_cut(b.geom, b.poset, plates[0], origin));
  CHECK_FALSE(is_cut(b.geom, b.poset, plates[1], origin));
  // the lone oblique ray bounds neither extreme: cut
  CHECK(is_cut(b.geom, b.poset, plates[2], origin));
  CHECK_THROWS_AS(is_cut(b.geom, b.poset, plates[0], face_by_rays(b.geom, {iv({1, 0})})),
                  FaceNotCodim2);
}

TEST_CASE("papera2 shards, upper and lower chambers, J") {
  Built b = build(gen_papera2());
  ShardDecomposition dec = compute_shards(b.geom, b.poset);
  CHECK(dec.issues.ok);
  REQUIRE(dec.shards.size() == 3);

  const int c01 = chamber_by_rays(b.geom, {iv({0, 1}), iv({1, 0})});
  const int c12 = chamber_by_rays(b.geom, {iv({1, 0}), iv({1, -1})});
  const int c23 = chamber_by_rays(b.geom, {iv({1, -1}), iv({0, -1})});
  const int c34 = chamber_by_rays(b.geom, {iv({0, -1}), iv({-1, 0})});
  const int c40 = chamber_by_rays(b.geom, {iv({-1, 0}), iv({0, 1})});

  // shard 0: the x-axis (normal (0,1))
  CHECK(dec.shards[0].walls.size() == 2);
  CHECK(dec.upper[0] == std::vector<int>{std::min(c01, c40), std::max(c01, c40)});
  CHECK(dec.lower[0] == std::vector<int>{std::min(c12, c34), std::max(c12, c34)});
  CHECK(dec.j_of_shard[0] == c40);
  // shard 1: the y-axis (normal (1,0))
  CHECK(dec.upper[1] == std::vector<int>{std::min(c01, c23), std::max(c01, c23)});
  CHECK(dec.lower[1] == std::vector<int>{std::min(c40, c34), std::max(c40, c34)});
  CHECK(dec.j_of_shard[1] == c23);
  // shard 2: the ray (1,-1)
  CHECK(dec.upper[2] == std::vector<int>{c12});
  CHECK(dec.lower[2] == std::vector<int>{c23});
  CHECK(dec.j_of_shard[2] == c12);

  // face closure of the x-axis shard: origin and both horizontal rays
  FaceSet expected(b.geom.faces().size());
  expected.set(face_by_rays(b.geom, {}));
  expected.set(face_by_rays(b.geom, {iv({1, 0})}));
  expected.set(face_by_rays(b.geom, {iv({-1, 0})}));
  CHECK(dec.shards[0].faces == expected);
}

TEST_CASE("shard of a cover arrow") {
  Built b = build(gen_papera2());
  ShardDecomposition dec = compute_shards(b.geom, b.poset);
  for (const auto& a : b.poset.arrows()) {
    const int s = shard_of_cover(dec, a);
    CHECK(std::binary_search(dec.shards[s].walls.begin(), dec.shards[s].walls.end(), a.wall));
  }
  const int w01_40 = wall_by_rays(b.geom, {iv({0, 1})});
  const int w23_34 = wall_by_rays(b.geom, {iv({0, -1})});
  // both vertical covers cross the same y-axis shard
  CHECK(dec.shard_of_wall[w01_40] == dec.shard_of_wall[w23_34]);
}

TEST_CASE("shard counts across bundled fans") {
  // coxeter A2: the line x+y=0 is cut at the origin into two ray shards
  Built a2 = build(gen_coxeter_a(2));
  ShardDecomposition dec2 = compute_shards(a2.geom, a2.poset);
  CHECK(dec2.shards.size() == 4);
  int singleton_shards = 0;
  for (const auto& s : dec2.shards)
    if (s.walls.size() == 1) ++singleton_shards;
  CHECK(singleton_shards == 2);

  for (int n = 1; n <= 4; ++n) {
    Built o = build(gen_orthant(n));
    CHECK(compute_shards(o.geom, o.poset).shards.size() == static_cast<size_t>(n));
  }
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      Built c = build(gen_crown(p, q));
      const auto dec = compute_shards(c.geom, c.poset);
      CHECK(static_cast<int>(dec.shards.size()) == p + q + 2);
      CHECK(dec.shards.size() == c.geom.fan().chambers.size() - 2);
    }
}

TEST_CASE("shards partition the walls and bound their chambers") {
  for (Fan fan : {gen_papera2(), gen_coxeter_a(3), gen_crown(3, 2), gen_orthant(3)}) {
    Built b = build(std::move(fan));
    ShardDecomposition dec = compute_shards(b.geom, b.poset);
    std::vector<int> seen(b.geom.walls().size(), 0);
    for (const auto& s : dec.shards) {
      CHECK(dec.upper[s.id].size() == s.walls.size());
      CHECK(dec.lower[s.id].size() == s.walls.size());
      CHECK_FALSE(dec.upper[s.id].empty());
      for (int w : s.walls) ++seen[w];
    }
    for (int count : seen) CHECK(count == 1);
    CHECK(dec.shards.size() == b.poset.join_irreducibles().size());
  }
}

TEST_CASE("join-irreducible / shard bijection and gamma factorization") {
  for (Fan fan : {gen_papera2(), gen_coxeter_a(3), gen_orthant(3), gen_crown(2, 3)}) {
    Built b = build(std::move(fan));
    ShardDecomposition dec = compute_shards(b.geom, b.poset);
    CHECK(verify_jirr_shard_bijection(b.geom, b.poset, dec).ok);
    CHECK(shard_wall_connectivity_check(b.geom, b.poset, dec).ok);
  }
}

TEST_CASE("canonical join via lower shards matches the oracle") {
  Built b = build(gen_papera2());
  ShardDecomposition dec = compute_shards(b.geom, b.poset);
  const int c01 = chamber_by_rays(b.geom, {iv({0, 1}), iv({1, 0})});
  const int c23 = chamber_by_rays(b.geom, {iv({1, -1}), iv({0, -1})});
  const int c34 = chamber_by_rays(b.geom, {iv({0, -1}), iv({-1, 0})});
  const int c40 = chamber_by_rays(b.geom, {iv({-1, 0}), iv({0, 1})});
  const int c12 = chamber_by_rays(b.geom, {iv({1, 0}), iv({1, -1})});

  std::vector<int> expected{std::min(c40, c23), std::max(c40, c23)};
  CHECK(canonical_join_via_shards(dec, c01) == expected);
  CHECK(canonical_join_via_shards(dec, c34).empty());
  CHECK(canonical_join_via_shards(dec, c12) == std::vector<int>{c12});

  for (Fan fan : {gen_coxeter_a(3), gen_crown(1, 4)}) {
    Built big = build(std::move(fan));
    ShardDecomposition d = compute_shards(big.geom, big.poset);
    for (int c = 0; c < big.poset.size(); ++c) {
      auto oracle = big.poset.canonical_join_rep(c);
      REQUIRE(oracle.found);
      CHECK(canonical_join_via_shards(d, c) == oracle.elements);
    }
  }
}

TEST_CASE("arrangement oracle") {
  SUBCASE("papera2 is not an arrangement") {
    Built b = build(gen_papera2());
    auto oracle = arrangement_shards_oracle(b.geom, b.poset);
    CHECK_FALSE(oracle.is_arrangement);
    CHECK(oracle.reason.find("(1,1)") != std::string::npos);
  }
  SUBCASE("matches the cutting-rule shards on arrangement fans") {
    for (Fan fan : {gen_coxeter_a(2), gen_coxeter_a(3), gen_orthant(3), gen_orthant(1)}) {
      Built b = build(std::move(fan));
      ShardDecomposition dec = compute_shards(b.geom, b.poset);
      auto oracle = arrangement_shards_oracle(b.geom, b.poset);
      REQUIRE(oracle.is_arrangement);
      CHECK(shard_wall_sets(b.geom, oracle.shards) == shard_wall_sets(b.geom, dec.shards));
    }
  }
}
