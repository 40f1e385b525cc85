#pragma once

#include "subspace_lab/number_field.hpp"

#include <memory>

namespace subspace_lab {

namespace detail {
struct CRealNode;
}

// Lazy certified real: an expression DAG whose enclosure(bits) returns a
// rational interval of width <= 2^-bits containing the exact value.
// Comparisons refine both sides until separated; ties between non-identical
// expressions hit the precision cap and throw undecided_comparison, so exact
// decision paths (rational structure, multiplicative dependence) must be
// tried by callers first where ties are possible.
class CReal {
public:
    CReal();  // zero
    CReal(const Rat& r);
    CReal(int n) : CReal(Rat(n)) {}
    explicit CReal(const AlgebraicReal& a);
    explicit CReal(const NFElem& a);

    // Certified height of an algebraic number as a lazy value.
    static CReal algebraic_height(const AlgebraicReal& a);

    // Natural log; argument must be certifiably positive.
    static CReal ln(const CReal& x);
    static CReal ln2();

    CReal nth_root(unsigned long k) const;  // value must be >= 0
    CReal pow_int(long e) const;

    friend CReal operator+(const CReal& a, const CReal& b);
    friend CReal operator-(const CReal& a, const CReal& b);
    friend CReal operator-(const CReal& a);
    friend CReal operator*(const CReal& a, const CReal& b);
    friend CReal operator/(const CReal& a, const CReal& b);

    friend CReal abs(const CReal& a);
    friend CReal max(const CReal& a, const CReal& b);
    friend CReal min(const CReal& a, const CReal& b);

    Interval enclosure(unsigned long bits) const;

    int compare(const CReal& o) const;  // -1/0/+1; may throw undecided_comparison
    int sign() const;
    bool operator<(const CReal& o) const { return compare(o) < 0; }
    bool operator<=(const CReal& o) const { return compare(o) <= 0; }
    bool operator>(const CReal& o) const { return compare(o) > 0; }
    bool operator>=(const CReal& o) const { return compare(o) >= 0; }

    Integer floor() const;  // may throw undecided_comparison on exact integers
    Integer ceil() const;

    double to_double_approx() const;
    std::string str() const;  // enclosure at 64 bits

private:
    std::shared_ptr<detail::CRealNode> node_;
    explicit CReal(std::shared_ptr<detail::CRealNode> n) : node_(std::move(n)) {}
};

// Certified enclosure of ln(x) for rational x > 0, width <= 2^-bits.
Interval ln_rat(const Rat& x, unsigned long bits);

// Decimal rendering of an interval, outward rounded to `digits` fractional
// digits: "[-1.234568, -1.234567]".
std::string decimal_enclosure(const Interval& iv, unsigned digits);

}  // namespace subspace_lab
