#pragma once

#include "subspace_lab/creal.hpp"

#include <utility>
#include <vector>

namespace subspace_lab {

enum class Side { above, below };

// One rational solution alpha of |xi - alpha| <= H(alpha)^(-2-delta).
struct RothSolution {
    Rat alpha;
    Rat height;              // max(|num|, den) in lowest terms
    Side side;               // certified sign of alpha - xi
    Interval margin;         // enclosure of H^(-2-delta) - |xi - alpha|, >= 0 certified exactly
};

enum class SolutionClass { large_solution, small_solution };

// All solutions with H(alpha) <= B, each accepted by an exact comparison in
// Q(xi), sorted by (height, alpha). Parallelizes over denominator ranges.
std::vector<RothSolution> scan_roth(const AlgebraicReal& xi, const Rat& delta, const Rat& B,
                                    int threads = 1);

// Independent oracle: continued-fraction convergents with q <= B, plus an
// exhaustive pass over the heights H with H^delta < 2 (above that, any
// solution satisfies |xi - alpha| < 1/(2 den^2) and must be a convergent).
std::vector<RothSolution> scan_roth_convergent(const AlgebraicReal& xi, const Rat& delta,
                                               const Rat& B);

// Large iff H(alpha) >= max(H(xi), 2). An exact tie H(alpha) = H(xi) with
// irrational-looking H(xi) cannot be settled by refinement and throws.
SolutionClass classify_solution(const RothSolution& s, const AlgebraicReal& xi);

// Pairs on the same side of xi lying in a common window [Q, Q^(1+delta/2))
// with Q >= 2. Empty on any genuine scan output.
std::vector<std::pair<RothSolution, RothSolution>> audit_gap_principle(
    const std::vector<RothSolution>& sols, const Rat& delta);

// ceil(1 + 2 log E / log(1 + delta/2)) as an exact integer-valued rational.
// Multiplicative dependence of E and 1+delta/2 is detected so exact integer
// values of the expression round correctly.
Rat window_count(const Rat& E, const Rat& delta);

struct RothBounds {
    CReal large_bound;   // 2^25 delta^-3 log(2d) log(delta^-1 log(2d))
    CReal small_bound;   // 10 delta^-1 loglog max(H(xi), 4)
    Integer m;           // 1 + floor(25600 delta^-2 log(2d))
    Rat omega;           // 162 m^2 delta^-1
    CReal c_log;         // log C = 3m binom(d,2) delta^-1 (240 m^2 delta^-1)^m log(36 H(xi))
    CReal c_log_ln;      // ln of c_log, the only displayable form of that magnitude (0 when d = 1)
    bool outside_valid_range = false;  // d = 1: the large-bound log factor can be <= 0
};

RothBounds roth_bounds(long d, const Rat& delta, const CReal& h_xi);

}  // namespace subspace_lab
