#pragma once

#include "subspace_lab/algebraic.hpp"

#include <vector>

namespace subspace_lab {

// Multiplicative height of a rational tuple: prod over all places of
// max(1, |x_1|_v, ..., |x_n|_v). Exact. Equals the sup norm on nonzero
// integer vectors, and lcm(denominators) * max(1, sup |x_i|) in general.
Rat height_vector(const std::vector<Rat>& x);

// Height of a single rational p/q in lowest terms: max(|p|, q).
Rat height_rational(const Rat& x);

// Certified enclosure of the absolute height of an algebraic number.
Interval height_algebraic(const AlgebraicReal& xi, unsigned long bits);

Rat sup_norm(const std::vector<Rat>& x);

// First nonzero coordinate made positive (in place).
void canonical_sign_in_place(std::vector<Integer>& v);

// Clears denominators, divides by the content, fixes canonical sign.
// Zero vector maps to itself.
std::vector<Integer> primitive_integer_vector(const std::vector<Rat>& x);

}  // namespace subspace_lab
