#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace_lab/number_field.hpp"

#include <random>

using namespace subspace_lab;

namespace {
NumberFieldPtr cubic_field() {
    return std::make_shared<const NumberField>(
        AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2))));
}
NumberFieldPtr quad_field() {
    return std::make_shared<const NumberField>(
        AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2))));
}
}  // namespace

TEST_CASE("generator satisfies its relation") {
    auto F = cubic_field();
    NFElem g = NFElem::generator(F);
    CHECK(g * g * g == NFElem(Rat(2)));
    CHECK(pow(g, 3) == NFElem(Rat(2)));
    CHECK(pow(g, 6) == NFElem(Rat(4)));
    CHECK(pow(g, 0) == NFElem(Rat(1)));
    CHECK((g * g * g).is_rational());
    CHECK(!g.is_rational());
    CHECK((g * g * g).rational_value() == Rat(2));
}

TEST_CASE("ring identities") {
    auto F = quad_field();
    NFElem s = NFElem::generator(F);
    NFElem a = NFElem(Rat(1)) + s;               // 1 + sqrt2
    CHECK(a * a == NFElem(Rat(3)) + NFElem(Rat(2)) * s);
    CHECK((a - a).is_zero());
    CHECK(a - NFElem(Rat(1)) == s);
}

TEST_CASE("division and inverses") {
    auto F = cubic_field();
    NFElem g = NFElem::generator(F);
    NFElem a = NFElem(Rat(3)) - g + g * g;
    CHECK(a * a.inv() == NFElem(Rat(1)));
    CHECK((a / a) == NFElem(Rat(1)));
    CHECK(g.inv() == g * g / NFElem(Rat(2)));  // 1/g = g^2/2
    CHECK_THROWS(NFElem(Rat(0)).inv());
    CHECK(pow(g, -3) == NFElem(Rat(Integer(1), Integer(2))));
}

TEST_CASE("signs and ordering are exact") {
    auto F = quad_field();
    NFElem s = NFElem::generator(F);
    // sqrt2 - 141/100 > 0, sqrt2 - 142/100 < 0
    CHECK((s - NFElem(Rat(Integer(141), Integer(100)))).sign() > 0);
    CHECK((s - NFElem(Rat(Integer(142), Integer(100)))).sign() < 0);
    CHECK((s * s - NFElem(Rat(2))).sign() == 0);
    CHECK(NFElem(Rat(0)).sign() == 0);
    CHECK(abs(NFElem(Rat(-7))) == NFElem(Rat(7)));
    CHECK(abs(NFElem(Rat(1)) - s) == s - NFElem(Rat(1)));
    CHECK(min(s, NFElem(Rat(Integer(3), Integer(2)))) == s);
    CHECK(max(s, NFElem(Rat(1))) == s);
}

TEST_CASE("enclosures converge to the real embedding") {
    auto F = cubic_field();
    NFElem g = NFElem::generator(F);
    NFElem a = g * g - g;  // 2^(2/3) - 2^(1/3) = 0.327...
    Interval e = a.enclosure(60);
    CHECK(e.width() <= Rat(Integer(1), pow_int(Integer(2), 60)));
    CHECK(e.contains_zero() == false);
    CHECK(e.lo > Rat(Integer(32), Integer(100)));
    CHECK(e.hi < Rat(Integer(33), Integer(100)));
}

TEST_CASE("min_poly_of recovers minimal polynomials") {
    auto F = cubic_field();
    NFElem g = NFElem::generator(F);
    CHECK(min_poly_of(g).integer_normalized() ==
          Poly({Rat(-2), Rat(0), Rat(0), Rat(1)}));
    CHECK(min_poly_of(g * g).integer_normalized() ==
          Poly({Rat(-4), Rat(0), Rat(0), Rat(1)}));
    CHECK(min_poly_of(NFElem(Rat(Integer(5), Integer(3)))).degree() == 1);
    // 1 + 2^(1/3): minimal polynomial (x-1)^3 - 2 = x^3 - 3x^2 + 3x - 3
    CHECK(min_poly_of(NFElem(Rat(1)) + g).integer_normalized() ==
          Poly({Rat(-3), Rat(3), Rat(-3), Rat(1)}));
}

TEST_CASE("mixed arithmetic coerces rationals") {
    auto F = quad_field();
    NFElem s = NFElem::generator(F);
    NFElem x = NFElem(Rat(Integer(1), Integer(2))) * s + NFElem(3);
    CHECK(x - NFElem(3) == s / NFElem(Rat(2)));
    CHECK(NFElem(2) + NFElem(Rat(Integer(1), Integer(2))) == NFElem(Rat(Integer(5), Integer(2))));
}

TEST_CASE("field axioms on random cubic elements") {
    auto F = cubic_field();
    NFElem g = NFElem::generator(F);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int i = 0; i < 100; ++i) {
        NFElem a = NFElem(Rat(coeff(rng))) + NFElem(Rat(coeff(rng))) * g +
                   NFElem(Rat(coeff(rng))) * g * g;
        NFElem b = NFElem(Rat(coeff(rng))) + NFElem(Rat(coeff(rng))) * g;
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        if (!a.is_zero()) {
            Interval ia = a.enclosure(50);
            CHECK((a.sign() > 0) == (ia.lo.sign() > 0));
        }
    }
}
