#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace_lab/creal.hpp"

using namespace subspace_lab;

namespace {
AlgebraicReal sqrt2() {
    return AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2)));
}

struct CapGuard {
    long saved = precision_cap();
    ~CapGuard() { set_precision_cap(saved); }
};
}  // namespace

TEST_CASE("rational leaves are exact") {
    CReal x(Rat(Integer(1), Integer(3)));
    Interval e = x.enclosure(100);
    CHECK(e.contains(Rat(Integer(1), Integer(3))));
    CHECK(e.width() <= Rat(Integer(1), pow_int(Integer(2), 100)));
    CHECK(CReal(2).compare(CReal(Rat(2))) == 0);
    CHECK(CReal(1) < CReal(2));
    CHECK(CReal(-1).sign() < 0);
    CHECK(CReal(0).sign() == 0);
}

TEST_CASE("ln2 and ln_rat agree with known digits") {
    // ln 2 = 0.69314718055994530941...
    Interval l2 = CReal::ln2().enclosure(64);
    CHECK(l2.lo > Rat(Integer(693147180), Integer(1000000000)));
    CHECK(l2.hi < Rat(Integer(693147181), Integer(1000000000)));
    Interval l3 = ln_rat(Rat(3), 64);
    // ln 3 = 1.09861228866810969140...
    CHECK(l3.lo > Rat(Integer(1098612288), Integer(1000000000)));
    CHECK(l3.hi < Rat(Integer(1098612289), Integer(1000000000)));
    CHECK(l3.width() <= Rat(Integer(1), pow_int(Integer(2), 64)));
    // ln(1/2) = -ln 2
    Interval lh = ln_rat(Rat(Integer(1), Integer(2)), 64);
    CHECK(lh.hi < Rat(0));
    CHECK((lh.lo + l2.hi).abs() <= Rat(Integer(1), pow_int(Integer(2), 60)));
    CHECK(ln_rat(Rat(1), 32).contains(Rat(0)));
}

TEST_CASE("arithmetic DAG refines through compositions") {
    CReal x = CReal::ln(CReal(3)) - CReal::ln2();      // ln(3/2) = 0.405465...
    Interval e = x.enclosure(80);
    CHECK(e.lo > Rat(Integer(405465), Integer(1000000)));
    CHECK(e.hi < Rat(Integer(405466), Integer(1000000)));
    CReal y = x / CReal::ln2();
    CHECK(y > CReal(Rat(Integer(1), Integer(2))));
    CHECK(y < CReal(Rat(Integer(3), Integer(5))));
    // x - x is an exact tie between transcendental branches: no enclosure
    // ever excludes or pins zero, so the sign query must refuse at the cap.
    CapGuard guard;
    set_precision_cap(512);
    CHECK_THROWS_AS((x - x).sign(), undecided_comparison);
}

TEST_CASE("nth_root and pow_int invert") {
    CReal r = CReal(2).nth_root(2);
    Interval e = r.enclosure(70);
    CHECK((e.lo * e.lo <= Rat(2)));
    CHECK((e.hi * e.hi >= Rat(2)));
    CHECK(r.pow_int(2).enclosure(60).contains(Rat(2)));
    CHECK(r.pow_int(-2).enclosure(60).contains(Rat(Integer(1), Integer(2))));
    CHECK(CReal(Rat(Integer(27), Integer(8))).nth_root(3).enclosure(40).contains(
        Rat(Integer(3), Integer(2))));
    CHECK(CReal(5).pow_int(0).enclosure(20).contains(Rat(1)));
}

TEST_CASE("floor and ceil of provably irrational values") {
    CHECK(CReal::ln(CReal(3)).floor() == 1);
    CHECK(CReal::ln(CReal(3)).ceil() == 2);
    CHECK(CReal(2).nth_root(2).floor() == 1);
    CHECK((CReal(10) * CReal::ln2()).floor() == 6);  // 6.93...
    CHECK(CReal(Rat(Integer(7), Integer(2))).floor() == 3);
    CHECK(CReal(Rat(-1) / Rat(2)).floor() == -1);
}

TEST_CASE("algebraic embeddings and heights") {
    CReal s(sqrt2());
    CHECK(s > CReal(Rat(Integer(7), Integer(5))));
    CHECK(s < CReal(Rat(Integer(3), Integer(2))));
    CHECK((s * s).enclosure(60).contains(Rat(2)));
    CReal h = CReal::algebraic_height(sqrt2());
    CHECK((h * h).enclosure(60).contains(Rat(2)));  // H(sqrt2) = sqrt2
    CHECK(CReal::algebraic_height(AlgebraicReal::from_rational(Rat(Integer(3), Integer(7))))
              .enclosure(30)
              .contains(Rat(7)));
}

TEST_CASE("ties throw undecided_comparison under a small cap") {
    CapGuard guard;
    set_precision_cap(64);
    CReal a = CReal::ln2();
    CReal b = CReal::ln(CReal(4)) / CReal(2);  // same value, different DAG
    CHECK_THROWS_AS((void)a.compare(b), undecided_comparison);
    try {
        (void)a.compare(b);
    } catch (const undecided_comparison& e) {
        CHECK(e.cap_bits() == 64);
    }
    // floor of an exact integer disguised as a DAG also refuses to guess
    CReal two = CReal::ln(CReal(4)) / CReal::ln2();
    CHECK_THROWS_AS((void)two.floor(), undecided_comparison);
}

TEST_CASE("decimal_enclosure formats outward") {
    CHECK(decimal_enclosure(Interval(Rat(1), Rat(2)), 2) == "[1.00, 2.00]");
    std::string third = decimal_enclosure(Interval(Rat(Integer(1), Integer(3))), 4);
    CHECK(third == "[0.3333, 0.3334]");
    std::string neg = decimal_enclosure(Interval(Rat(Integer(-1), Integer(3))), 4);
    CHECK(neg == "[-0.3334, -0.3333]");
}

TEST_CASE("max min abs") {
    CReal a(Rat(Integer(1), Integer(2))), b(Rat(Integer(1), Integer(3)));
    CHECK(max(a, b).enclosure(30).contains(Rat(Integer(1), Integer(2))));
    CHECK(min(a, b).enclosure(30).contains(Rat(Integer(1), Integer(3))));
    CHECK(abs(CReal(-3)).enclosure(30).contains(Rat(3)));
}
