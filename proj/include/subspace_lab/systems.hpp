#pragma once

#include "subspace_lab/linear_form.hpp"
#include "subspace_lab/places.hpp"

namespace subspace_lab {

// One place of the system: n independent forms, exponents c_iv, constant C_v.
struct PlaceBlock {
    Place v;
    std::vector<LinearForm> forms;  // exactly n
    std::vector<Rat> exponents;     // c_iv, length n
    Rat C{1};                       // C_v > 0
};

// The inequality system |L_i^{(v)}(x)|_v <= C_v H(x)^{c_iv} over x in Z^n,
// with the standing side conditions checked by validate_system.
struct FormSystem {
    long n = 0;
    Rat delta;
    Rat H{1};   // coefficient height bound
    long D = 1; // coefficient degree bound
    long R = 0; // distinct-form bound
    std::vector<PlaceBlock> places;  // must include the infinite place
    NumberFieldPtr field;            // null when all coefficients rational

    const PlaceBlock& infinite_block() const;
};

// Checks every side condition; returns human-readable violations (empty =
// valid). Comparisons are exact where both sides are rational and certified
// enclosure comparisons otherwise.
std::vector<std::string> validate_system(const FormSystem& sys);

struct SolutionValue {
    Place v;
    long form_index;  // 0-based
    Interval value;   // |L_i(x)|_v; point interval when exact
    bool exact;
};

struct SolutionRecord {
    std::vector<Integer> x;  // canonical sign
    Rat height;              // max-norm
    std::vector<SolutionValue> values;
    bool large = false;
};

struct EnumerationResult {
    std::vector<SolutionRecord> solutions;    // sorted by height, then lex
    std::vector<std::vector<Integer>> boundary;  // candidates with undecided checks
};

// All canonical-sign nonzero x in Z^n with max-norm <= B satisfying every
// inequality. Exact comparisons throughout (q-th power clearing); candidates
// that still fail to decide are reported in `boundary`, never dropped
// silently. Parallel over coordinate slabs; result deterministic.
EnumerationResult enumerate_solutions(const FormSystem& sys, const Rat& B, int threads = 1);

// Large iff H(x) >= max(H, n^(2n/delta)); exact power comparison.
bool classify_large(const FormSystem& sys, const Rat& height);

// Exact test height >= n^(2n/delta) via integer powers.
bool at_least_rational_power(const Rat& height, long n, const Rat& two_n_over_delta);

}  // namespace subspace_lab
