#pragma once

#include "subspace_lab/polynomial.hpp"

#include <vector>

namespace subspace_lab {

// Isolating intervals for all real roots of a squarefree polynomial,
// pairwise disjoint, sorted ascending. Point intervals mark rational roots.
// Non-point intervals have nonzero opposite signs at their endpoints.
std::vector<Interval> isolate_real_roots(const Poly& p);

// Shrinks an isolating interval to width <= 2^-bits. The interval must
// either be a point or have sign(p(lo)) = -sign(p(hi)) != 0.
Interval refine_real_root(const Poly& p, Interval iv, unsigned long bits);

// One certified box per non-real root in the upper half-plane (conjugates
// implied). Boxes are pairwise disjoint, disjoint from the real axis, and
// each contains exactly one root (interval Newton certificate).
std::vector<Box> isolate_complex_pairs(const Poly& p);

// Shrinks a certified complex root box to width <= 2^-bits.
Box refine_complex_root(const Poly& p, Box box, unsigned long bits);

}  // namespace subspace_lab
