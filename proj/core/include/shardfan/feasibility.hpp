#pragma once

#include "shardfan/exact.hpp"

namespace shardfan {

// Exact rational feasibility of small linear systems. Two independent
// engines are provided and must agree wherever both apply: Fourier-Motzkin
// elimination (used for ambient dimension <= 4) and a phase-one exact
// simplex (used beyond).

enum class Rel { Eq, Ge };

struct LinearConstraint {
  RatVec coeffs;
  Rel rel = Rel::Ge;
  Rat rhs = 0;
};

struct LinearSystem {
  int num_vars = 0;
  std::vector<LinearConstraint> rows;

  void add(RatVec coeffs, Rel rel, Rat rhs);
};

enum class FeasibilityEngine { FourierMotzkin, Simplex };

FeasibilityEngine engine_for_dim(int ambient_dim);

bool is_feasible(const LinearSystem& sys, FeasibilityEngine engine);

/// True iff cone(rays_a) and cone(rays_b) intersect in strictly more than
/// cone(common). Decided by exact feasibility of the coefficient system.
bool cones_meet_beyond_common_face(const std::vector<IntVec>& rays_a,
                                   const std::vector<IntVec>& rays_b,
                                   const std::vector<IntVec>& common,
                                   FeasibilityEngine engine);

}  // namespace shardfan
