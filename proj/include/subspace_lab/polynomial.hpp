#pragma once

#include "subspace_lab/interval.hpp"

#include <vector>

namespace subspace_lab {

// Dense univariate polynomial over Q, coefficients c[0] + c[1] x + ...
// Invariant: leading coefficient nonzero (zero polynomial has empty c).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rat a) { return Poly({std::move(a)}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rat& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Interval eval(const Interval& x) const;
    Box eval(const Box& x) const;

    // quotient/remainder over Q; b nonzero
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    Poly monic() const;

    // integer-normalized copy: integer coefficients, content 1, positive lead
    Poly integer_normalized() const;
    bool has_integer_coeffs() const;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly gcd(const Poly& a, const Poly& b);        // monic gcd
Poly squarefree_part(const Poly& a);           // a / gcd(a, a')

// Sturm sequence of p (squarefree not required; counts distinct roots).
std::vector<Poly> sturm_sequence(const Poly& p);
// Number of distinct real roots in (a, b], a < b, using a precomputed chain.
long sturm_count(const std::vector<Poly>& chain, const Rat& a, const Rat& b);
// Number of distinct real roots in the open interval (-inf, +inf).
long sturm_count_all(const std::vector<Poly>& chain);

// Cauchy root bound: all complex roots have |z| <= bound.
Rat cauchy_root_bound(const Poly& p);

}  // namespace subspace_lab
