#include "subspace_lab/interval.hpp"

#include <algorithm>

namespace subspace_lab {

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = min(min(p1, p2), min(p3, p4));
    Rat hi = max(max(p1, p2), max(p3, p4));
    return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("Interval: division by interval containing 0");
    return a * Interval(b.hi.inv(), b.lo.inv());
}

Interval abs(const Interval& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return -a;
    return Interval(Rat(0), max(-a.lo, a.hi));
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi));
}

Interval max(const Interval& a, const Interval& b) {
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi));
}

Interval min(const Interval& a, const Interval& b) {
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi));
}

Interval pow(const Interval& a, long e) {
    if (e == 0) return Interval(Rat(1));
    if (e < 0) return Interval(Rat(1)) / pow(a, -e);
    if (e % 2 == 1 || a.lo.sign() >= 0)
        return Interval(a.lo.pow(e), a.hi.pow(e));
    if (a.hi.sign() <= 0) return Interval(a.hi.pow(e), a.lo.pow(e));
    // even power straddling zero
    return Interval(Rat(0), max(a.lo.pow(e), a.hi.pow(e)));
}

bool disjoint(const Interval& a, const Interval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

Interval round_out(const Interval& a, unsigned long bits) {
    return Interval(dyadic_floor(a.lo, bits), dyadic_ceil(a.hi, bits));
}

Box operator+(const Box& a, const Box& b) { return Box(a.re + b.re, a.im + b.im); }
Box operator-(const Box& a, const Box& b) { return Box(a.re - b.re, a.im - b.im); }
Box operator-(const Box& a) { return Box(-a.re, -a.im); }

Box operator*(const Box& a, const Box& b) {
    return Box(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Box operator/(const Box& a, const Box& b) {
    Interval d = mag_sq(b);
    if (d.contains_zero()) throw std::domain_error("Box: division by box containing 0");
    Box conj(b.re, -b.im);
    Box num = a * conj;
    return Box(num.re / d, num.im / d);
}

Interval square(const Interval& a) {
    Interval s = abs(a);
    return Interval(s.lo * s.lo, s.hi * s.hi);
}

Interval mag_sq(const Box& a) { return square(a.re) + square(a.im); }

Box round_out(const Box& a, unsigned long bits) {
    return Box(round_out(a.re, bits), round_out(a.im, bits));
}

bool box_subset_interior(const Box& inner, const Box& outer) {
    return outer.re.lo < inner.re.lo && inner.re.hi < outer.re.hi &&
           outer.im.lo < inner.im.lo && inner.im.hi < outer.im.hi;
}

bool disjoint(const Box& a, const Box& b) {
    return disjoint(a.re, b.re) || disjoint(a.im, b.im);
}

Interval nth_root(const Interval& a, unsigned long k, unsigned long bits) {
    if (a.lo.sign() < 0) throw std::domain_error("nth_root: negative radicand");
    if (k == 0) throw std::domain_error("nth_root: k == 0");
    Integer scale = pow_int(Integer(2), bits);
    // lower: floor(root(lo * 2^(k*bits) scaled)) / 2^bits, adjusting so the
    // result^k stays below/above the endpoint.
    auto root_lo = [&](const Rat& x) {
        // largest m/2^bits with (m/2^bits)^k <= x:  m = floor( (x * 2^(k bits))^(1/k) )
        Rat scaled = x * Rat(pow_int(Integer(2), bits * k));
        Integer m = iroot_floor(scaled.floor(), k);
        return Rat(m, scale);
    };
    auto root_hi = [&](const Rat& x) {
        Rat scaled = x * Rat(pow_int(Integer(2), bits * k));
        Integer m = iroot_floor(scaled.ceil(), k);
        if (Rat(pow_int(m, k)) < scaled) m += 1;
        return Rat(m, scale);
    };
    return Interval(root_lo(a.lo), root_hi(a.hi));
}

}  // namespace subspace_lab
