#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace_lab/systems.hpp"

#include "../support/oracles.hpp"

using namespace subspace_lab;

namespace {

LinearForm form_r(std::vector<long> c) {
    std::vector<NFElem> v;
    for (long x : c) v.emplace_back(Rat(x));
    return LinearForm(std::move(v));
}

// |x1 + x2| <= H^-2, |x2| <= H at the real place.
FormSystem unit_sum_system() {
    FormSystem sys;
    sys.n = 2;
    sys.delta = Rat(1);
    sys.H = Rat(1);
    sys.D = 1;
    sys.R = 2;
    PlaceBlock pb;
    pb.v = Place::inf();
    pb.forms = {form_r({1, 1}), form_r({0, 1})};
    pb.exponents = {Rat(-2), Rat(1)};
    sys.places.push_back(pb);
    return sys;
}

// Real block plus a 2-adic block demanding 2-divisibility of x1 + x2.
FormSystem padic_system() {
    FormSystem sys;
    sys.n = 2;
    sys.delta = Rat(Integer(1), Integer(2));
    sys.H = Rat(1);
    sys.D = 1;
    sys.R = 3;
    PlaceBlock inf;
    inf.v = Place::inf();
    inf.forms = {form_r({1, 0}), form_r({0, 1})};
    inf.exponents = {Rat(1), Rat(1)};
    sys.places.push_back(inf);
    PlaceBlock two;
    two.v = Place::finite(Integer(2));
    two.forms = {form_r({1, 1}), form_r({0, 1})};
    two.exponents = {Rat(Integer(-5), Integer(2)), Rat(0)};
    sys.places.push_back(two);
    return sys;
}

// Cubic field system: L1 = x1 + xi x2 + xi^2 x3 small, L2 = x2, L3 = x3.
FormSystem cubic_system(const Rat& delta) {
    FormSystem sys;
    sys.n = 3;
    sys.delta = delta;
    sys.H = Rat(2);
    sys.D = 3;
    sys.R = 3;
    sys.field = std::make_shared<const NumberField>(
        AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2))));
    NFElem g = NFElem::generator(sys.field);
    PlaceBlock pb;
    pb.v = Place::inf();
    pb.forms = {LinearForm({NFElem(Rat(1)), g, g * g}), form_r({0, 1, 0}), form_r({0, 0, 1})};
    pb.exponents = {Rat(-2) - delta, Rat(1), Rat(1)};
    sys.places.push_back(pb);
    return sys;
}

}  // namespace

TEST_CASE("validation accepts the reference systems") {
    CHECK(validate_system(unit_sum_system()).empty());
    CHECK(validate_system(padic_system()).empty());
    CHECK(validate_system(cubic_system(Rat(Integer(1), Integer(2)))).empty());
    CHECK(validate_system(cubic_system(Rat(1))).empty());
}

TEST_CASE("validation rejects each broken side condition") {
    auto count = [](const FormSystem& s) { return validate_system(s).size(); };

    FormSystem s = unit_sum_system();
    s.delta = Rat(0);
    CHECK(count(s) >= 1);
    s = unit_sum_system();
    s.delta = Rat(2);
    CHECK(count(s) >= 1);

    s = unit_sum_system();
    s.places[0].v = Place::finite(Integer(3));  // no infinite place
    CHECK(count(s) >= 1);

    s = unit_sum_system();
    s.places.push_back(s.places[0]);  // duplicate place
    CHECK(count(s) >= 1);

    s = unit_sum_system();
    s.places[0].forms.pop_back();  // wrong form count
    CHECK(count(s) >= 1);

    s = unit_sum_system();
    s.places[0].C = Rat(0);
    CHECK(count(s) >= 1);

    s = padic_system();
    s.places[1].v = Place::finite(Integer(6));  // not prime
    CHECK(count(s) >= 1);

    s = unit_sum_system();
    s.places[0].exponents = {Rat(-2), Rat(Integer(1), Integer(2))};  // max != 1
    CHECK(count(s) >= 1);

    s = unit_sum_system();
    s.places[0].exponents = {Rat(Integer(-3), Integer(2)), Rat(1)};  // sum > -delta
    CHECK(count(s) >= 1);

    s = unit_sum_system();
    s.places[0].forms = {form_r({1, 1}), form_r({2, 2})};  // dependent forms
    CHECK(count(s) >= 1);

    s = unit_sum_system();
    s.R = 1;  // three distinct forms? here two forms, R = 1
    CHECK(count(s) >= 1);

    s = cubic_system(Rat(1));
    s.D = 1;  // cubic coefficients, degree bound 1
    CHECK(count(s) >= 1);

    s = cubic_system(Rat(1));
    s.H = Rat(1);  // coefficient height above bound
    CHECK(count(s) >= 1);
}

TEST_CASE("unit sum enumeration matches the hand count") {
    // H = 1: (0,1), (1,0), (1,-1); H >= 2: multiples of (1,-1) only.
    auto res = enumerate_solutions(unit_sum_system(), Rat(10));
    CHECK(res.boundary.empty());
    REQUIRE(res.solutions.size() == 12);
    CHECK(res.solutions[0].x == std::vector<Integer>{Integer(0), Integer(1)});
    CHECK(res.solutions[1].x == std::vector<Integer>{Integer(1), Integer(-1)});
    CHECK(res.solutions[2].x == std::vector<Integer>{Integer(1), Integer(0)});
    for (size_t i = 3; i < res.solutions.size(); ++i) {
        long k = static_cast<long>(i) - 1;
        CHECK(res.solutions[i].x == std::vector<Integer>{Integer(k), Integer(-k)});
        CHECK(res.solutions[i].height == Rat(k));
    }
    // sorted by (height, lex)
    for (size_t i = 1; i < res.solutions.size(); ++i)
        CHECK(res.solutions[i - 1].height <= res.solutions[i].height);
}

TEST_CASE("p-adic enumeration matches the hand count") {
    auto res = enumerate_solutions(padic_system(), Rat(20));
    CHECK(res.boundary.empty());
    // 4 solutions at height 1, then (k,-k) for k = 2..20.
    REQUIRE(res.solutions.size() == 23);
    CHECK(res.solutions[0].x == std::vector<Integer>{Integer(0), Integer(1)});
    CHECK(res.solutions[3].x == std::vector<Integer>{Integer(1), Integer(1)});
    CHECK(res.solutions[22].x == std::vector<Integer>{Integer(20), Integer(-20)});
    // every reported value is exact for a rational system
    for (const auto& rec : res.solutions)
        for (const auto& val : rec.values) {
            CHECK(val.exact);
            CHECK(val.value.is_point());
        }
}

TEST_CASE("enumeration is thread count independent") {
    auto r1 = enumerate_solutions(padic_system(), Rat(40), 1);
    auto r4 = enumerate_solutions(padic_system(), Rat(40), 4);
    REQUIRE(r1.solutions.size() == r4.solutions.size());
    for (size_t i = 0; i < r1.solutions.size(); ++i) {
        CHECK(r1.solutions[i].x == r4.solutions[i].x);
        CHECK(r1.solutions[i].height == r4.solutions[i].height);
    }
}

TEST_CASE("cubic field height 1 solutions, by hand") {
    // |x1 + xi x2 + xi^2 x3| <= 1, |x2| <= 1, |x3| <= 1 with xi = 2^(1/3)
    auto res = enumerate_solutions(cubic_system(Rat(Integer(1), Integer(2))), Rat(1));
    CHECK(res.boundary.empty());
    REQUIRE(res.solutions.size() == 5);
    CHECK(res.solutions[0].x == std::vector<Integer>{Integer(0), Integer(1), Integer(-1)});
    CHECK(res.solutions[1].x == std::vector<Integer>{Integer(1), Integer(-1), Integer(0)});
    CHECK(res.solutions[2].x == std::vector<Integer>{Integer(1), Integer(0), Integer(-1)});
    CHECK(res.solutions[3].x == std::vector<Integer>{Integer(1), Integer(0), Integer(0)});
    CHECK(res.solutions[4].x == std::vector<Integer>{Integer(1), Integer(1), Integer(-1)});
}

TEST_CASE("cubic field enumeration finds the expected small heights") {
    auto res = enumerate_solutions(cubic_system(Rat(Integer(1), Integer(2))), Rat(12));
    CHECK(res.boundary.empty());
    CHECK(!res.solutions.empty());
    // canonical sign, nonzero, within height bound
    for (const auto& rec : res.solutions) {
        bool nonzero = false;
        for (const auto& c : rec.x) nonzero = nonzero || c != 0;
        CHECK(nonzero);
        for (const auto& c : rec.x) CHECK(abs(Rat(c)) <= Rat(12));
        std::vector<Integer> copy = rec.x;
        canonical_sign_in_place(copy);
        CHECK(copy == rec.x);
        CHECK(!oracles::system_double_contradicts(cubic_system(Rat(Integer(1), Integer(2))), rec));
    }
}

TEST_CASE("floating point cross check on every reference solution") {
    for (const auto& sys : {unit_sum_system(), padic_system()}) {
        auto res = enumerate_solutions(sys, Rat(30));
        for (const auto& rec : res.solutions)
            CHECK(!oracles::system_double_contradicts(sys, rec));
    }
}

TEST_CASE("large classification against the exact threshold") {
    FormSystem sys = unit_sum_system();
    // threshold: max(H, n^(2n/delta)) = max(1, 2^4) = 16
    CHECK(!classify_large(sys, Rat(15)));
    CHECK(classify_large(sys, Rat(16)));
    CHECK(classify_large(sys, Rat(17)));
    CHECK(at_least_rational_power(Rat(16), 2, Rat(4)));
    CHECK(!at_least_rational_power(Rat(15), 2, Rat(4)));
    // fractional exponent: n^(2n/delta) = 3^(12) at n = 3, delta = 1/2 ... use 2^(9/2)
    CHECK(at_least_rational_power(Rat(23), 2, Rat(Integer(9), Integer(2))));   // 23^2 >= 2^9
    CHECK(!at_least_rational_power(Rat(22), 2, Rat(Integer(9), Integer(2))));  // 22^2 < 512
}

TEST_CASE("enumerated large flags match classify_large") {
    auto res = enumerate_solutions(unit_sum_system(), Rat(20));
    for (const auto& rec : res.solutions)
        CHECK(rec.large == classify_large(unit_sum_system(), rec.height));
}

TEST_CASE("infinite_block accessor") {
    FormSystem sys = padic_system();
    CHECK(sys.infinite_block().v == Place::inf());
}

TEST_CASE("enumeration rejects unusable inputs") {
    CHECK_THROWS_AS(enumerate_solutions(unit_sum_system(), Rat(Integer(Integer(1) << 25))),
                    config_error);
    FormSystem bad = unit_sum_system();
    bad.delta = Rat(0);
    CHECK_THROWS_AS(enumerate_solutions(bad, Rat(10)), config_error);
}
