#pragma once

#include "shardfan/shards.hpp"

namespace shardfan {

// Element of the shard-intersection lattice: a face set together with the
// shards realizing it and the chamber it came from.
struct ShardIntersection {
  FaceSet faces;
  std::vector<int> generators;   // all shard ids containing the face set
  int rep_chamber = -1;          // chamber R with S(R) = faces
};

/// Face-set intersection of the given shards; the empty set yields V.
FaceSet intersect_shards(const ShardDecomposition& dec, const std::vector<int>& shard_ids,
                         int num_faces);

/// S(R): intersection of the shards of all covers of R; V for the minimum.
FaceSet s_of_chamber(const ChamberPoset& poset, const ShardDecomposition& dec, int chamber,
                     int num_faces);

struct ShardIntersectionLattice {
  int num_faces = 0;
  int dim = 0;
  std::vector<ShardIntersection> elements;  // canonical order
  std::vector<int> element_of_chamber;      // chamber -> element id
  std::vector<int> element_dims;            // max face dimension; V carries dim
  bool leq(int a, int b) const {            // containment
    return elements[a].faces.is_subset_of(elements[b].faces);
  }
  int index_of(const FaceSet& faces) const;  // -1 when absent
  /// Hasse covers of the containment order, as (smaller, larger) pairs.
  std::vector<std::pair<int, int>> hasse_covers() const;
};

// Enumerates { S(R) : R chamber }, and certifies it is the full intersection
// closure: S injective, every single shard and V present, closed under
// pairwise intersection.
ShardIntersectionLattice enumerate_shard_intersections(const FanGeometry& geom,
                                                       const ChamberPoset& poset,
                                                       const ShardDecomposition& dec,
                                                       CheckResult* issues = nullptr);

/// Shard-intersection order: face-set containment.
bool si_leq(const ShardIntersectionLattice& lattice, int a, int b);

// Core label set of R: gamma labels of all Hasse arrows inside the interval
// [meet of covers of R, R]. Sorted chamber ids.
std::vector<int> core_label_set(const ChamberPoset& poset, const ShardDecomposition& dec,
                                int chamber);

// SI order is the reverse of the core label order, pairwise, and the core
// label set of R equals { J(s) : S(R) contained in s }.
CheckResult verify_anti_isomorphism(const FanGeometry& geom, const ChamberPoset& poset,
                                    const ShardDecomposition& dec,
                                    const ShardIntersectionLattice& lattice, int threads = 1);

struct GammaFace {
  FaceSet faces;
  bool degenerate_chamber_case = false;  // star is a single chamber; V by convention
};

// Gamma(U): intersection of the shards of the covers of the star-interval
// maximum that stay above the star-interval minimum.
GammaFace gamma_of_face(const FanGeometry& geom, const ChamberPoset& poset,
                        const ShardDecomposition& dec, int face_id);

// For every face U and every intersection of matching dimension containing
// U, the intersection equals Gamma(U); and Gamma(U) is the intersection of
// all shards containing U (positive codimension).
CheckResult verify_containing_shard(const FanGeometry& geom, const ChamberPoset& poset,
                                    const ShardDecomposition& dec,
                                    const ShardIntersectionLattice& lattice);

struct GradednessReport {
  bool graded = true;
  bool dim_rank_ok = true;
  std::vector<int> rank;  // per element: cover count of the representing chamber
  CheckResult issues;
};

// rank(S(R)) = number of covers of R; every Hasse step of the containment
// order changes rank by one and dim S(R) = ambient dim - rank.
GradednessReport rank_and_gradedness(const FanGeometry& geom, const ChamberPoset& poset,
                                     const ShardIntersectionLattice& lattice);

}  // namespace shardfan
