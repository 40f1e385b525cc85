#pragma once

#include "subspace_lab/creal.hpp"

#include <optional>
#include <string>

namespace subspace_lab {

struct BoundReport {
    std::string name;
    std::optional<CReal> value;     // the bound itself; absent for doubly exponential forms
    std::optional<CReal> ln_value;  // natural log of the bound, when defined
    bool log_form = false;          // display uses base-2 log form (value above 2^1024)
    bool outside_range = false;     // an inner log factor is nonpositive; raw value kept
    std::string display;
};

// Decimal enclosure of value up to 2^1024; past that the value cannot be
// enclosed to absolute width, so render "2^<enclosure>" from ln_value.
std::string magnitude_display(const CReal& value, const CReal& ln_value);

// 10^9 2^(2n) n^14 delta^-3 ln(3 delta^-1 R D) ln(delta^-1 ln(3 R D)).
BoundReport subspace_count_bound(long n, const Rat& delta, long R, long D);

// 4^((n+9)^2) delta^-(n+4) ln(2RD) lnln(2RD), counting solutions of height
// at least max(2H, n^(2n/delta)).
struct ThresholdedBound {
    BoundReport report;
    CReal threshold;
    bool threshold_from_height = false;  // the max is attained by 2H (decided exactly)
};
ThresholdedBound thresholded_count_bound(long n, const Rat& delta, long R, long D, const Rat& H);

// The classic doubly exponential count 2^(2^(27 n delta^-2)), reported
// through its exact iterated base-2 logarithm.
struct IteratedLogBound {
    BoundReport report;
    Rat log2_log2;  // 27 n delta^-2
};
IteratedLogBound iterated_log_count_bound(long n, const Rat& delta);

// m = floor(10^8 2^(2n) n^14 delta^-2 ln(3 delta^-1 R D)), refined until the
// floor is unambiguous, and omega = 3 n delta^-1 ln(3RD).
struct LadderConstants {
    Integer m;
    CReal omega;
};
LadderConstants ladder_constants(long n, const Rat& delta, long R, long D);

// m (1 + floor(ln omega / ln(1 + delta/2n))) + 1. The rational overload
// detects omega being an exact power of 1 + delta/2n before falling back to
// certified evaluation.
Integer window_total(const Integer& m, const Rat& omega, long n, const Rat& delta);
Integer window_total(const Integer& m, const CReal& omega, long n, const Rat& delta);

}  // namespace subspace_lab
