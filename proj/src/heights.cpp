#include "subspace_lab/heights.hpp"

namespace subspace_lab {

Rat sup_norm(const std::vector<Rat>& x) {
    Rat m(0);
    for (const Rat& xi : x) m = max(m, abs(xi));
    return m;
}

Rat height_vector(const std::vector<Rat>& x) {
    // Finite places contribute exactly lcm of the reduced denominators:
    // max(1, |x_i|_p) = p^(ord_p lcm den) at every prime p.
    Integer l(1);
    for (const Rat& xi : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), xi.den().get_mpz_t());
    return Rat(l) * max(Rat(1), sup_norm(x));
}

Rat height_rational(const Rat& x) {
    Integer n = x.num();
    if (n < 0) n = -n;
    Integer d = x.den();
    return Rat(n > d ? n : d);
}

Interval height_algebraic(const AlgebraicReal& xi, unsigned long bits) {
    return xi.height_enclosure(bits);
}

void canonical_sign_in_place(std::vector<Integer>& v) {
    for (const Integer& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (Integer& w : v) w = -w;
        return;
    }
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rat>& x) {
    Integer l(1);
    for (const Rat& xi : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), xi.den().get_mpz_t());
    std::vector<Integer> v;
    v.reserve(x.size());
    Integer content(0);
    for (const Rat& xi : x) {
        Rat scaled = xi * Rat(l);
        v.push_back(scaled.num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.back().get_mpz_t());
    }
    if (content > 1)
        for (Integer& c : v) c /= content;
    canonical_sign_in_place(v);
    return v;
}

}  // namespace subspace_lab
