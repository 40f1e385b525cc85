#pragma once

#include "subspace_lab/rational.hpp"

#include <string>

namespace subspace_lab {

// Closed rational interval [lo, hi], lo <= hi. Arithmetic is exact; widths
// are controlled explicitly by round_out().
struct Interval {
    Rat lo, hi;

    Interval() = default;
    Interval(Rat point) : lo(point), hi(point) {}
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::domain_error("Interval: lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / Rat(2); }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool is_point() const { return lo == hi; }
    // Sign if determined: -1, 0 (exact point zero), +1; 2 when straddling.
    int determined_sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        if (lo.is_zero() && hi.is_zero()) return 0;
        return 2;
    }
    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Requires 0 not in b.
Interval operator/(const Interval& a, const Interval& b);

Interval abs(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval pow(const Interval& a, long e);
bool disjoint(const Interval& a, const Interval& b);

// Encloses [lo, hi] in dyadic endpoints with denominator 2^bits.
Interval round_out(const Interval& a, unsigned long bits);

// Axis-aligned complex rectangle re + i*im.
struct Box {
    Interval re, im;

    Box() = default;
    Box(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    Rat width() const { return max(re.width(), im.width()); }
    std::string str() const { return re.str() + " + i*" + im.str(); }
};

Box operator+(const Box& a, const Box& b);
Box operator-(const Box& a, const Box& b);
Box operator-(const Box& a);
Box operator*(const Box& a, const Box& b);
// Requires 0 not in b.
Box operator/(const Box& a, const Box& b);

// Enclosure of |z|^2 = re^2 + im^2 (always >= 0).
Interval mag_sq(const Box& a);
// Enclosure of x^2 (always >= 0) -- tighter than x*x when 0 in x.
Interval square(const Interval& a);
Box round_out(const Box& a, unsigned long bits);
bool box_subset_interior(const Box& inner, const Box& outer);
bool disjoint(const Box& a, const Box& b);

// Certified k-th root of a nonnegative interval, outward-rounded to
// denominator 2^bits.
Interval nth_root(const Interval& a, unsigned long k, unsigned long bits);

}  // namespace subspace_lab
