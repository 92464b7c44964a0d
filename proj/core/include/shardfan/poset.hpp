#pragma once

#include "shardfan/fan.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>

namespace shardfan {

struct CoverArrow {
  int upper = -1;
  int lower = -1;
  int wall = -1;  // -1 for synthetic posets
};

struct PosetCycleError : std::runtime_error {
  explicit PosetCycleError(const std::string& what) : std::runtime_error(what) {}
};

/// A chamber barycenter lies exactly on a wall hyperplane; the input cannot
/// be oriented and is not a g-fan.
struct AmbiguousOrientation : std::runtime_error {
  int wall;
  explicit AmbiguousOrientation(int wall_id)
      : std::runtime_error("ambiguous orientation at wall " + std::to_string(wall_id)),
        wall(wall_id) {}
};

// Finite poset given by its Hasse arrows (upper -> lower), with the full
// order as the transitive closure. Also usable for synthetic posets that do
// not come from a fan.
class ChamberPoset {
 public:
  static ChamberPoset from_arrows(int num_elements, std::vector<CoverArrow> arrows);

  int size() const { return size_; }
  const std::vector<CoverArrow>& arrows() const { return arrows_; }
  bool leq(int a, int b) const { return up_[a].test(b); }  // a <= b
  const boost::dynamic_bitset<>& up_set(int x) const { return up_[x]; }
  const boost::dynamic_bitset<>& down_set(int x) const { return down_[x]; }

  std::vector<int> sources() const;  // no incoming arrow (maximal elements)
  std::vector<int> sinks() const;    // no outgoing arrow (minimal elements)
  int top() const;                   // unique source, -1 if not unique
  int bottom() const;                // unique sink, -1 if not unique

  int out_degree(int x) const { return static_cast<int>(arrows_out_[x].size()); }
  const std::vector<int>& arrows_out(int x) const { return arrows_out_[x]; }  // arrow indices
  const std::vector<int>& arrows_in(int x) const { return arrows_in_[x]; }

  std::optional<int> meet(int a, int b) const;
  std::optional<int> join(int a, int b) const;

  struct LatticeCheck {
    bool ok = true;
    int a = -1, b = -1;
    bool join_side = false;  // witness: which bound was missing
  };
  LatticeCheck check_lattice() const;

  struct SemidistributivityResult {
    bool ok = true;
    std::array<int, 3> witness{-1, -1, -1};
    bool meet_side = false;
    std::string detail;
  };
  /// Exhaustive check of both semidistributivity implications over all triples.
  SemidistributivityResult check_semidistributive() const;

  /// Elements covering exactly one element (excludes the minimum).
  std::vector<int> join_irreducibles() const;

  struct GammaResult {
    bool found = false;
    int value = -1;
    bool join_irreducible = false;
  };
  /// Minimum of { x | lower v x = upper } for a Hasse arrow, by brute force.
  GammaResult gamma(int upper, int lower) const;

  struct CjrResult {
    bool found = false;
    std::vector<int> elements;  // sorted
  };
  // Brute-force canonical join representation: enumerates irredundant
  // antichains of join-irreducibles below x and returns the unique one
  // refined by all others.
  CjrResult canonical_join_rep(int x) const;

  /// Structural defects: cycles are fatal at build time, the rest is reported.
  std::vector<std::string> structural_issues(const FanGeometry* geom = nullptr) const;

 private:
  int size_ = 0;
  std::vector<CoverArrow> arrows_;
  std::vector<std::vector<int>> arrows_out_, arrows_in_;
  std::vector<boost::dynamic_bitset<>> up_, down_;
};

// Orients the dual graph by the half-space rule: across each wall the
// chamber whose barycenter pairs positively with the wall's canonical
// normal is the upper chamber. Throws AmbiguousOrientation.
ChamberPoset orient_hasse(const FanGeometry& geom);

struct StarInterval {
  int face = -1;
  std::vector<int> chambers;  // sorted ids
  boost::dynamic_bitset<> member;
  int min = -1, max = -1;
  bool unique_extremes = false;
  bool is_full_interval = false;  // equals the order interval [min, max]
};

/// Star of a face with its induced order; checks it is a full interval.
StarInterval star_interval(const FanGeometry& geom, const ChamberPoset& poset, int face_id);

struct CrownResult {
  bool ok = false;
  int chain_a = 0, chain_b = 0;  // interior node counts, chain_a <= chain_b
  std::string detail;
};

/// Checks that the induced Hasse quiver of a star interval is a crown: one
/// source, one sink, and two disjoint chains between them.
CrownResult crown_check(const ChamberPoset& poset, const StarInterval& star);

}  // namespace shardfan
