#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace_lab/algebraic.hpp"

using namespace subspace_lab;

namespace {
AlgebraicReal sqrt2() { return AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2))); }
AlgebraicReal cbrt2() { return AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2))); }
AlgebraicReal golden() { return AlgebraicReal(Poly({Rat(-1), Rat(-1), Rat(1)}), Interval(Rat(1), Rat(2))); }
}  // namespace

TEST_CASE("construction validates") {
    CHECK(sqrt2().degree() == 2);
    CHECK(!sqrt2().is_rational());
    // interval containing both roots is rejected
    CHECK_THROWS_AS(AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(1)}), Interval(Rat(-2), Rat(2))),
                    config_error);
    // interval containing no root is rejected
    CHECK_THROWS_AS(AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(1)}), Interval(Rat(3), Rat(4))),
                    config_error);
    // reducible polynomials are rejected through degree 4
    CHECK_THROWS_AS(AlgebraicReal(Poly({Rat(1), Rat(-2), Rat(1)}), Interval(Rat(0), Rat(2))),
                    config_error);  // (x-1)^2
    CHECK_THROWS_AS(AlgebraicReal(Poly({Rat(-1), Rat(0), Rat(1)}), Interval(Rat(0), Rat(2))),
                    config_error);  // (x-1)(x+1)
    CHECK_THROWS_AS(
        AlgebraicReal(Poly({Rat(-4), Rat(0), Rat(0), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2))),
        config_error);  // x^4 - 4 = (x^2-2)(x^2+2)
}

TEST_CASE("rational values") {
    AlgebraicReal half = AlgebraicReal::from_rational(Rat(Integer(1), Integer(2)));
    CHECK(half.is_rational());
    CHECK(half.degree() == 1);
    CHECK(half.rational_value() == Rat(Integer(1), Integer(2)));
    CHECK(half.compare(Rat(Integer(1), Integer(2))) == 0);
    CHECK(half.floor_value() == 0);
}

TEST_CASE("enclosure narrows and stays correct") {
    AlgebraicReal x = sqrt2();
    Interval e = x.enclosure(80);
    CHECK(e.width() <= Rat(Integer(1), pow_int(Integer(2), 80)));
    CHECK((e.lo * e.lo <= Rat(2)));
    CHECK((e.hi * e.hi >= Rat(2)));
    CHECK(x.compare(Rat(Integer(3), Integer(2))) < 0);
    CHECK(x.compare(Rat(Integer(7), Integer(5))) > 0);
    CHECK(x.floor_value() == 1);
    CHECK(cbrt2().floor_value() == 1);
}

TEST_CASE("sign_of_poly is exact") {
    AlgebraicReal x = sqrt2();
    CHECK(x.sign_of_poly(Poly({Rat(-2), Rat(0), Rat(1)})) == 0);
    CHECK(x.sign_of_poly(Poly({Rat(-4), Rat(0), Rat(0), Rat(0), Rat(1)})) == 0);  // x^4 - 4
    CHECK(x.sign_of_poly(Poly({Rat(-1), Rat(1)})) > 0);                           // x - 1
    CHECK(x.sign_of_poly(Poly({Rat(2), Rat(-1)})) > 0);                           // 2 - x
    CHECK(x.sign_of_poly(Poly({Rat(-3), Rat(0), Rat(2)})) > 0);                   // 2x^2 - 3 = 1
    CHECK(x.sign_of_poly(Poly({Rat(-5), Rat(0), Rat(2)})) < 0);                   // 2x^2 - 5 = -1
}

TEST_CASE("height of quadratic and cubic irrationals") {
    // H(sqrt 2) = sqrt 2: Mahler measure of x^2 - 2 is 2.
    Interval h = sqrt2().height_enclosure(40);
    CHECK((h.lo * h.lo <= Rat(2)));
    CHECK((h.hi * h.hi >= Rat(2)));
    // H(2^(1/3))^3 = 2
    Interval h3 = cbrt2().height_enclosure(40);
    CHECK((h3.lo.pow(3) <= Rat(2)));
    CHECK((h3.hi.pow(3) >= Rat(2)));
    // golden ratio: M(x^2 - x - 1) = phi, H = sqrt(phi), so H^4 - H^2 - 1 = 0
    Interval hg = golden().height_enclosure(40);
    CHECK((hg.lo.pow(4) - hg.hi.pow(2) <= Rat(1)));
    CHECK((hg.hi.pow(4) - hg.lo.pow(2) >= Rat(1)));

    Interval m = mahler_height_enclosure(Poly({Rat(-2), Rat(0), Rat(1)}), 40);
    CHECK((m.lo * m.lo <= Rat(2)));
    CHECK((m.hi * m.hi >= Rat(2)));
}

TEST_CASE("convergents of sqrt 2 and the golden ratio") {
    auto cv = sqrt2().convergents(Integer(70));
    std::vector<Rat> want = {Rat(1), Rat(Integer(3), Integer(2)), Rat(Integer(7), Integer(5)),
                             Rat(Integer(17), Integer(12)), Rat(Integer(41), Integer(29)),
                             Rat(Integer(99), Integer(70))};
    REQUIRE(cv.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(cv[i] == want[i]);

    // golden ratio: ratios of consecutive Fibonacci numbers
    auto gv = golden().convergents(Integer(13));
    std::vector<Rat> fib = {Rat(1), Rat(2), Rat(Integer(3), Integer(2)),
                            Rat(Integer(5), Integer(3)), Rat(Integer(8), Integer(5)),
                            Rat(Integer(13), Integer(8)), Rat(Integer(21), Integer(13))};
    REQUIRE(gv.size() == fib.size());
    for (size_t i = 0; i < fib.size(); ++i) CHECK(gv[i] == fib[i]);

    // every convergent beats 1/(2 q^2) or is the best below its height
    auto cb = cbrt2().convergents(Integer(50));
    CHECK(cb.size() >= 4);
    CHECK(cb[0] == Rat(1));
    CHECK(cb[1] == Rat(Integer(4), Integer(3)));
    CHECK(cb[2] == Rat(Integer(5), Integer(4)));
    CHECK(cb[3] == Rat(Integer(29), Integer(23)));
}

TEST_CASE("refinement is shared between copies") {
    AlgebraicReal a = sqrt2();
    AlgebraicReal b = a;
    b.enclosure(200);
    Interval e = a.enclosure(200);
    CHECK(e.width() <= Rat(Integer(1), pow_int(Integer(2), 200)));
}
