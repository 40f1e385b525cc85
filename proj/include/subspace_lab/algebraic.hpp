#pragma once

#include "subspace_lab/interval.hpp"
#include "subspace_lab/polynomial.hpp"

#include <memory>
#include <vector>

namespace subspace_lab {

// A real algebraic number: integer minimal polynomial (content 1, positive
// leading coefficient) plus an isolating interval with rational endpoints
// containing exactly one real root. Construction validates: squarefreeness,
// isolation (Sturm count 1), and irreducibility completely through degree 4
// (no-rational-root check above that; callers must supply true minimal
// polynomials for exactness guarantees at degree >= 5).
//
// Copies share refinement state; refinement is thread safe.
class AlgebraicReal {
public:
    AlgebraicReal(const Poly& minpoly, const Interval& isolating);
    static AlgebraicReal from_rational(const Rat& r);

    const Poly& minpoly() const;
    long degree() const;
    bool is_rational() const;  // degree 1
    Rat rational_value() const;

    // Certified enclosure of width <= 2^-bits.
    Interval enclosure(unsigned long bits) const;

    // Exact sign of g(xi) for g in Q[x]; 0 iff g reduces to 0 mod minpoly.
    int sign_of_poly(const Poly& g) const;

    int compare(const Rat& r) const;  // -1, 0, +1
    Integer floor_value() const;

    // Certified enclosure of the absolute multiplicative height
    // H = (lead * prod over all complex roots of max(1, |root|))^(1/deg),
    // of width <= 2^-bits.
    Interval height_enclosure(unsigned long bits) const;

    // Continued-fraction convergents p/q (coprime, q >= 1) while q <= qmax.
    std::vector<Rat> convergents(const Integer& qmax) const;

    std::string str() const;

private:
    struct State;
    std::shared_ptr<State> st_;
    explicit AlgebraicReal(std::shared_ptr<State> st) : st_(std::move(st)) {}
};

// Certified enclosure of M(p)^(1/deg p) -- the absolute height of any root
// of an irreducible integer polynomial p -- of width <= 2^-bits.
Interval mahler_height_enclosure(const Poly& p, unsigned long bits);

}  // namespace subspace_lab
