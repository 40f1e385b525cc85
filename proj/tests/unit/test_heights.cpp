#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace_lab/heights.hpp"
#include "subspace_lab/places.hpp"

#include <random>

using namespace subspace_lab;

TEST_CASE("height of a rational") {
    CHECK(height_rational(Rat(Integer(3), Integer(4))) == Rat(4));
    CHECK(height_rational(Rat(Integer(-22), Integer(7))) == Rat(22));
    CHECK(height_rational(Rat(5)) == Rat(5));
    CHECK(height_rational(Rat(0)) == Rat(1));
    CHECK(height_rational(Rat(Integer(6), Integer(4))) == Rat(3));  // lowest terms first
}

TEST_CASE("vector height on integer vectors is the sup norm") {
    CHECK(height_vector({Rat(3), Rat(-7), Rat(2)}) == Rat(7));
    CHECK(height_vector({Rat(0), Rat(1)}) == Rat(1));
    CHECK(height_vector({Rat(2), Rat(4)}) == Rat(4));  // no gcd division
}

TEST_CASE("vector height matches the places definition") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 25);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> x = {Rat(Integer(num(rng)), Integer(den(rng))),
                              Rat(Integer(num(rng)), Integer(den(rng))),
                              Rat(Integer(num(rng)), Integer(den(rng)))};
        // H(x) = prod_v max(1, |x_1|_v, ..., |x_n|_v) over inf and all
        // primes dividing any numerator or denominator.
        Rat expect(1);
        std::vector<Integer> primes;
        for (const auto& c : x) {
            if (c.is_zero()) continue;
            for (const auto& [p, e] : exponent_vector(c.abs()))
                if (std::find(primes.begin(), primes.end(), p) == primes.end())
                    primes.push_back(p);
        }
        Rat m(1);
        for (const auto& c : x) m = max(m, c.abs());
        expect *= m;
        for (const auto& p : primes) {
            Rat mp(1);
            for (const auto& c : x)
                if (!c.is_zero()) mp = max(mp, abs_value(c, Place::finite(p)));
            expect *= mp;
        }
        CHECK(height_vector(x) == expect);
    }
}

TEST_CASE("sup norm") {
    CHECK(sup_norm({Rat(Integer(-7), Integer(2)), Rat(3)}) == Rat(Integer(7), Integer(2)));
    CHECK(sup_norm({Rat(0), Rat(0)}) == Rat(0));
}

TEST_CASE("canonical sign flips on the first nonzero coordinate") {
    std::vector<Integer> v = {Integer(0), Integer(-4), Integer(7)};
    canonical_sign_in_place(v);
    CHECK(v == std::vector<Integer>{Integer(0), Integer(4), Integer(-7)});
    std::vector<Integer> w = {Integer(2), Integer(-5)};
    canonical_sign_in_place(w);
    CHECK(w == std::vector<Integer>{Integer(2), Integer(-5)});
    std::vector<Integer> z = {Integer(0), Integer(0)};
    canonical_sign_in_place(z);
    CHECK(z == std::vector<Integer>{Integer(0), Integer(0)});
}

TEST_CASE("primitive integer vector") {
    auto p = primitive_integer_vector({Rat(Integer(1), Integer(2)), Rat(Integer(-3), Integer(4))});
    CHECK(p == std::vector<Integer>{Integer(2), Integer(-3)});
    auto q = primitive_integer_vector({Rat(-4), Rat(6)});
    CHECK(q == std::vector<Integer>{Integer(2), Integer(-3)});
    auto z = primitive_integer_vector({Rat(0), Rat(0)});
    CHECK(z == std::vector<Integer>{Integer(0), Integer(0)});
}

TEST_CASE("height of an algebraic number brackets the known value") {
    AlgebraicReal s2(Poly({Rat(-2), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2)));
    Interval h = height_algebraic(s2, 50);
    CHECK((h.lo * h.lo <= Rat(2)));
    CHECK((h.hi * h.hi >= Rat(2)));
    CHECK(h.width() <= Rat(Integer(1), pow_int(Integer(2), 50)));
    AlgebraicReal r = AlgebraicReal::from_rational(Rat(Integer(-22), Integer(7)));
    CHECK(height_algebraic(r, 30).contains(Rat(22)));
}
