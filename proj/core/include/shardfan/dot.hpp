#pragma once

#include "shardfan/shard_intersections.hpp"

namespace shardfan {

// Deterministic DOT exports: byte-identical across runs for the same input.
// Chamber nodes are named by sorted ray-index tuples, shard-intersection
// nodes by the sorted tuple of shards containing them.

std::string poset_dot(const FanGeometry& geom, const ChamberPoset& poset);

std::string shard_intersection_dot(const ShardIntersectionLattice& lattice);

/// Hasse quiver of the core label order on chambers.
std::string core_label_order_dot(const FanGeometry& geom, const ChamberPoset& poset,
                                 const ShardDecomposition& dec);

std::string chamber_label(const FanGeometry& geom, int chamber);
std::string intersection_label(const ShardIntersectionLattice& lattice, int element);

}  // namespace shardfan
