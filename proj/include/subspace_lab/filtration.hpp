#pragma once

#include "subspace_lab/creal.hpp"
#include "subspace_lab/systems.hpp"

#include <functional>
#include <vector>

namespace subspace_lab {

// Local weight of a subspace: 0 for the zero space, otherwise the minimum of
// sum_{i in I} c_iv over index sets I of size dim U whose forms restrict to
// independent functionals on U. Exact.
Rat nu_v(const Subspace& U, const FormSystem& sys, const Place& v);

// Total weight: sum of nu_v over the system's places.
Rat nu(const Subspace& U, const FormSystem& sys);

// Slope of a proper subspace: (nu(Q^n) - nu(U)) / (n - dim U).
Rat mu(const Subspace& U, const FormSystem& sys);

// Smallest family containing the generators and closed under pairwise sum
// and intersection. Throws invariant_violation if it exceeds `cap` members.
std::vector<SubspaceF> vojta_closure(const std::vector<SubspaceF>& gens,
                                     std::size_t cap = 10000);

struct FiltrationReport {
    Rat nu_full;        // nu(Q^n)
    Rat mu_zero;        // mu of the zero subspace: nu_full / n
    Rat mu0;            // minimum slope over all candidates
    Subspace U0;        // intersection of all slope minimizers
    std::vector<Subspace> minimizers;
    std::vector<std::pair<Subspace, Rat>> candidates;  // candidate -> slope
    bool semistable = false;                           // U0 = (0)
    // The minimizers of nu and of mu need not agree; set when they differ.
    bool slope_convention_mismatch = false;
    std::size_t closure_size = 0;
};

// Minimum-slope subspace data for the system: candidates are the zero space
// together with the rational members of the closure of the form kernels.
// Verifies mu(U0) attains the minimum.
FiltrationReport exceptional_subspace(const FormSystem& sys);

// Each primitive basis row h of U0 satisfies |h|^2 <= (n H^2)^(4^n). Exact.
bool check_u0_height(const Subspace& U0, const FormSystem& sys);

struct CubicLineSolutions {
    Rat alpha;
    std::vector<long> admitted_u;                 // u values passing the box condition
    std::vector<std::vector<Integer>> solutions;  // triples (u r, r - u s, -s) that verify
    bool rhs_below_one = false;  // no |u| >= 1 can pass; only u = 0 is a candidate
};

// Solutions x = (u r, r - u s, -s) of the cubic test system produced by a
// rational approximation alpha = r/s of xi, for |u| <= u_range. Membership
// and the admission condition
//   |u|^(3+delta) 2^(2+delta) (1+|xi|) |xi - alpha| H(alpha)^(3+delta) <= 1
// are checked exactly in Q(xi).
CubicLineSolutions cubic_solutions_from_u(const AlgebraicReal& xi, const Rat& delta,
                                          const Rat& alpha, long u_range);

// Evaluator alpha -> 2^(-2-delta) (1+|xi|)^-1 N^(-3-delta) H(alpha)^(-3-delta),
// the certified lower bound for |xi - alpha| when at most N solutions exist.
std::function<CReal(const Rat&)> roth_lower_bound_from_count(const AlgebraicReal& xi,
                                                             const Rat& delta, const Integer& N);

}  // namespace subspace_lab
