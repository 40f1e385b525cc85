#pragma once

#include "subspace_lab/systems.hpp"

#include <string>

namespace subspace_lab {

// Parses "poly=[c0,c1,...];interval=[lo,hi]" (ascending coefficients, exact
// rationals) into a validated algebraic real.
AlgebraicReal parse_algebraic(const std::string& spec);

// Loads a form system from a sectioned text file:
//
//   n = 3
//   delta = 1/2
//   H = 2
//   D = 3
//   R = 3
//
//   [algebraic xi]
//   poly = [-2, 0, 0, 1]
//   interval = [1, 2]
//
//   [place inf]
//   C = 1
//   form = "1, xi, xi^2 ; c = -5/2"
//   form = "0, 1, 0   ; c = 1"
//
// Coefficients are sums of terms: a rational, <name>^k, or a product
// <rational>*<name>^k, with <name> the single declared generator. Finite
// places use [place <prime>]. Structural errors throw config_error; the
// semantic side conditions are left to validate_system.
FormSystem load_system(const std::string& path);

}  // namespace subspace_lab
