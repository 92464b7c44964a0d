#pragma once

#include "shardfan/check.hpp"
#include "shardfan/poset.hpp"

namespace shardfan {

/// Face-closed set of fan faces, the canonical representation of a union of
/// closed cones. Set operations realize the geometric ones exactly.
using FaceSet = boost::dynamic_bitset<>;

struct FaceNotCodim2 : std::runtime_error {
  explicit FaceNotCodim2(const std::string& what) : std::runtime_error(what) {}
};

// Maximal connected union of walls lying in one hyperplane; connectivity is
// through shared codimension-2 faces.
struct Plate {
  int id = -1;
  Hyperplane hyperplane;
  std::vector<int> walls;  // sorted wall ids
};

// Maximal uncut-connected union of a plate's walls, together with the
// face closure of that union.
struct Shard {
  int id = -1;
  int plate = -1;
  Hyperplane hyperplane;
  std::vector<int> walls;  // sorted wall ids
  FaceSet faces;
};

std::vector<Plate> compute_plates(const FanGeometry& geom);

// The cutting rule at a codimension-2 face L: true iff no wall of the plate
// through L bounds the maximum or minimum chamber of the star interval at L,
// while some wall through L does. Throws FaceNotCodim2.
bool is_cut(const FanGeometry& geom, const ChamberPoset& poset, const Plate& plate,
            int codim2_face);

struct ShardDecomposition {
  std::vector<Plate> plates;
  std::vector<Shard> shards;
  std::vector<int> shard_of_wall;       // wall id -> shard id
  std::vector<std::vector<int>> upper;  // shard id -> chamber ids, sorted
  std::vector<std::vector<int>> lower;
  std::vector<int> j_of_shard;  // minimum of the upper set, -1 on violation
  CheckResult issues;           // non-unique minima etc.
};

/// Plates, cut loci, shards, upper/lower chambers, and the J map.
ShardDecomposition compute_shards(const FanGeometry& geom, const ChamberPoset& poset);

/// The unique shard whose wall set contains the arrow's wall.
int shard_of_cover(const ShardDecomposition& dec, const CoverArrow& arrow);

/// Shard ids s with chamber in upper(s).
std::vector<int> lower_shards(const ShardDecomposition& dec, int chamber);

/// { J(s) : s a lower shard of chamber }, sorted.
std::vector<int> canonical_join_via_shards(const ShardDecomposition& dec, int chamber);

// J(S(j)) = j for every join-irreducible j, S(J(s)) = s for every shard s,
// and gamma(a->b) = J(S(a->b)) for every Hasse arrow.
CheckResult verify_jirr_shard_bijection(const FanGeometry& geom, const ChamberPoset& poset,
                                        const ShardDecomposition& dec);

// Wall graph of each shard is connected and codim-2-adjacent wall pairs have
// comparable upper chambers and comparable lower chambers, aligned.
CheckResult shard_wall_connectivity_check(const FanGeometry& geom, const ChamberPoset& poset,
                                          const ShardDecomposition& dec);

struct ArrangementShards {
  bool is_arrangement = false;
  std::string reason;  // why not, when not
  std::vector<Shard> shards;
};

// Shards by the classical hyperplane-arrangement rule (basic hyperplanes of
// rank-2 subarrangements, identity-chamber region). Applicable only when
// every wall hyperplane is fully tiled by walls.
ArrangementShards arrangement_shards_oracle(const FanGeometry& geom, const ChamberPoset& poset);

}  // namespace shardfan
