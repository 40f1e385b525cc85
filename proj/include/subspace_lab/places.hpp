#pragma once

#include "subspace_lab/rational.hpp"

#include <optional>
#include <vector>

namespace subspace_lab {

// Place of Q: the archimedean place or a finite place given by a prime.
struct Place {
    bool infinite = true;
    Integer p{0};

    static Place inf() { return Place{true, Integer(0)}; }
    static Place finite(Integer prime) { return Place{false, std::move(prime)}; }

    bool operator==(const Place& o) const {
        return infinite == o.infinite && (infinite || p == o.p);
    }
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return infinite;  // inf sorts first
        return p < o.p;
    }
    std::string str() const { return infinite ? "inf" : p.get_str(); }
};

// p-adic order of a nonzero rational; ord(0) is undefined (throws).
long ord_p(const Rat& x, const Integer& p);

// Normalized absolute value: |x|_inf usual, |x|_p = p^(-ord_p x), |0|_v = 0.
// Exact rational result.
Rat abs_value(const Rat& x, const Place& v);

// Product of |x|_v over the infinite place and every prime dividing the
// numerator or denominator. Exactly 1 for nonzero x.
Rat product_formula_check(const Rat& x);

// Prime factorization of n >= 1, ascending. Trial division + Pollard rho.
std::vector<std::pair<Integer, unsigned long>> factor(Integer n);

bool is_prime(const Integer& n);

// If ln(a)/ln(b) is rational (a, b positive rationals, b != 1), returns it
// exactly; otherwise nullopt (then the ratio is irrational). Decided via
// multiplicative dependence of exponent vectors.
std::optional<Rat> log_ratio_exact(const Rat& a, const Rat& b);

// Exponent vector of a positive rational over the primes of its support.
std::vector<std::pair<Integer, long>> exponent_vector(const Rat& x);

}  // namespace subspace_lab
