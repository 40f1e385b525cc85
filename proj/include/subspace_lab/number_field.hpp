#pragma once

#include "subspace_lab/algebraic.hpp"

#include <memory>
#include <vector>

namespace subspace_lab {

// Q(xi) for a fixed real algebraic generator. Elements are polynomials in xi
// of degree < deg(xi); arithmetic is exact, zero tests are reduction mod the
// minimal polynomial, and signs come from refining xi's isolating interval.
class NumberField {
public:
    explicit NumberField(AlgebraicReal xi) : xi_(std::move(xi)) {}
    const AlgebraicReal& generator() const { return xi_; }
    long degree() const { return xi_.degree(); }

private:
    AlgebraicReal xi_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Element of Q(xi), or a plain rational when no field is attached. Mixed
// arithmetic coerces rationals into the other operand's field; two distinct
// fields cannot be mixed.
class NFElem {
public:
    NFElem() : coeffs_{Rat(0)} {}
    NFElem(const Rat& r) : coeffs_{r} {}
    NFElem(int n) : coeffs_{Rat(n)} {}
    NFElem(NumberFieldPtr field, std::vector<Rat> coeffs);

    static NFElem generator(const NumberFieldPtr& field);

    const NumberFieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_rational() const;       // lies in Q
    Rat rational_value() const;     // requires is_rational()
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    NFElem operator-() const;
    NFElem& operator+=(const NFElem& o);
    NFElem& operator-=(const NFElem& o);
    NFElem& operator*=(const NFElem& o);
    NFElem& operator/=(const NFElem& o);

    friend NFElem operator+(NFElem a, const NFElem& b) { a += b; return a; }
    friend NFElem operator-(NFElem a, const NFElem& b) { a -= b; return a; }
    friend NFElem operator*(NFElem a, const NFElem& b) { a *= b; return a; }
    friend NFElem operator/(NFElem a, const NFElem& b) { a /= b; return a; }

    friend bool operator==(const NFElem& a, const NFElem& b) { return (a - b).is_zero(); }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    NFElem inv() const;
    int sign() const;  // exact
    NFElem abs() const { return sign() < 0 ? -*this : *this; }
    bool operator<(const NFElem& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const NFElem& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const NFElem& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const NFElem& o) const { return (*this - o).sign() >= 0; }

    // Certified enclosure of the real value, width <= 2^-bits.
    Interval enclosure(unsigned long bits) const;

    Poly as_poly() const { return Poly(coeffs_); }
    std::string str() const;

private:
    NumberFieldPtr field_;       // null: plain rational in coeffs_[0]
    std::vector<Rat> coeffs_;    // size degree(field) when field_ set

    static void coerce(NFElem& a, const NFElem& b);
    void reduce_();
};

NFElem abs(const NFElem& a);
NFElem min(const NFElem& a, const NFElem& b);
NFElem max(const NFElem& a, const NFElem& b);
NFElem pow(const NFElem& a, long e);

// Minimal polynomial over Q of an element of Q(xi): squarefree part of the
// characteristic polynomial of multiplication by the element.
Poly min_poly_of(const NFElem& a);

}  // namespace subspace_lab
