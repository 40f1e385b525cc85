#pragma once

#include "subspace_lab/creal.hpp"
#include "subspace_lab/systems.hpp"

#include <map>
#include <optional>
#include <vector>

namespace subspace_lab {

// Complex number with exact rational real and imaginary parts.
struct ComplexRat {
    Rat re;
    Rat im;
    Rat mag_sq() const { return re * re + im * im; }
};

// One class of the determinant partition: vectors sharing the max-norm index
// and the subcube of their normalized direction vector w in [-1,1]^(2n-2).
struct PartitionClass {
    long max_index = 1;            // 1-based first index attaining the max modulus
    std::vector<long> cube;        // per-axis subcube indices, length 2n-2
    long n = 0;
    Rat M;
    bool operator<(const PartitionClass& o) const;
    bool operator==(const PartitionClass& o) const;
    std::string str() const;       // "(i, [k1,...,k_{2n-2}])"
};

// Number of grid cells per axis: floor(2*sqrt(2)*Khat) + 1 for a rational
// Khat >= K = (M n^(n/2))^(1/(n-1)), so each cell has side <= (sqrt(2)K)^-1.
long partition_axis_count(long n, const Rat& M);

// Class of y under the partition: first max-modulus index i, z = y / y_i,
// subcube of (Re z_j, Im z_j : j != i). Zero maps to i=1, w=0. Exact.
PartitionClass partition_assign(const std::vector<ComplexRat>& y, const Rat& M);

// Certified check of |det(y_1..y_n)| <= M^-1 ||y_1|| ... ||y_n|| for vectors
// sharing a class, via the exact squared form. Throws config_error if the
// samples do not all share one class.
bool verify_class_determinant(const std::vector<std::vector<ComplexRat>>& samples, const Rat& M);

struct ClassCountBound {
    Rat partition_bound;        // (20n)^n M^2
    Rat clustering_bound;       // (90n)^(nd)
    Rat rational_case_bound;    // 200^n
    Integer actual_grid_count;  // n * axis_count^(2n-2)
};
ClassCountBound class_count_bound(long n, const Rat& M, long d);

// Span of the solutions in the height window [Q, Q^(1+delta/2n)); requires
// Q >= n^(2n/delta). Certifies det = 0 on sampled n-tuples of window members.
Subspace window_subspace(const FormSystem& sys, const std::vector<SolutionRecord>& solutions,
                         const Rat& Q);

// Solutions with Q <= H(x) < 2Q^(1+delta/2n) grouped by the partition class
// of (Q^-c_1 L_1(x), ..., Q^-c_n L_n(x)) at the infinite place, with
// M = (9/2)^(n/2); each class mapped to the span of its members. All class
// assignments are exact. Throws invariant_violation if a class spans the
// whole space.
std::map<PartitionClass, Subspace> small_solution_classes(const FormSystem& sys,
                                                          const std::vector<SolutionRecord>& solutions,
                                                          const Rat& Q);

struct SubspaceCover {
    std::vector<Subspace> cover;
    Rat bound;                                   // upper enclosure of 100^n D^(1/(n-1))
    bool bound_holds = false;                    // |cover| <= 100^n D^(1/(n-1)), exact
    Lattice lattice;                             // intersection of the local modules
    std::vector<std::vector<Integer>> pulled;    // points in lattice coordinates
};

// Determinant-bounded point sets lie in few proper subspaces: per finite
// place find a |det|_v-maximizing n-tuple, intersect the generated local
// modules to a lattice, pull the points back to integer coordinates, then
// cover greedily by proper spans. D_v values keyed by place; places absent
// from the map have D_v = 1.
SubspaceCover subspace_cover(const std::vector<std::vector<Rat>>& points,
                             const std::map<Place, Rat>& D_v);

struct CoveringReport {
    // Window h covers [base^lo_h, base^hi_h) with hi_h = lo_(h+1) exactly.
    std::vector<std::pair<Rat, Rat>> i1_exponents;  // base n, from exponent 2n/delta
    std::vector<std::pair<Rat, Rat>> i2_exponents;  // base 2, from exponent 0
    Integer A, B;
    bool covered_i1 = false, covered_i2 = false;
    CReal a_bound;  // 4 n delta^-1 loglog 4H
    CReal b_bound;  // 4 n delta^-1 log(3 log n)
};

// The two window families covering I1 = [n^(2n/delta), max(2H, n^(2n/delta)))
// and I2 = [1, n^(2n/delta)).
CoveringReport covering_intervals(long n, const Rat& delta, const Rat& H);

// Index of the window of `exps` (exponents to `base`) containing x, or none.
// Exact: multiplicative dependence of x and base is detected before falling
// back to certified logs.
std::optional<std::size_t> find_window(const std::vector<std::pair<Rat, Rat>>& exps, long base,
                                       const Rat& x);

struct SmallBound {
    CReal general;        // delta^-1 ((10^3 n)^(nd) + 4n loglog 4H)
    CReal rational_case;  // delta^-1 (10^(3n) + 4n loglog 4H)
};
SmallBound small_bound(long n, long d, const Rat& delta, const Rat& H);

}  // namespace subspace_lab
