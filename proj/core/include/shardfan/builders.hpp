#pragma once

#include "shardfan/fan.hpp"

namespace shardfan {

/// Coordinate fan: rays +-e_i, chambers all sign vectors. 1 <= n <= 6.
Fan gen_orthant(int n);

// Rank-2 crown fan: rays +-e1, +-e2, left intermediates (-k, 1) for
// k = 1..p and right intermediates (1, -k) for k = 1..q; chambers are
// consecutive ray pairs in circular order. p, q >= 0.
Fan gen_crown(int p, int q);

// Type-A Coxeter fan in fundamental-weight coordinates: chambers w(C+) for
// all w in the symmetric group S_{n+1}, generated by simple reflection
// matrices from the Cartan matrix. 2 <= n <= 4.
Fan gen_coxeter_a(int n);

/// The bundled 5-chamber example: the g-fan of the A2-quiver path algebra.
Fan gen_papera2();

}  // namespace shardfan
