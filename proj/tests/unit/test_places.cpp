#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace_lab/places.hpp"

#include <random>

using namespace subspace_lab;

TEST_CASE("place identity and ordering") {
    CHECK(Place::inf() == Place::inf());
    CHECK(Place::finite(Integer(2)) == Place::finite(Integer(2)));
    CHECK(!(Place::inf() == Place::finite(Integer(2))));
    CHECK(Place::inf() < Place::finite(Integer(2)));
    CHECK(Place::finite(Integer(2)) < Place::finite(Integer(3)));
    CHECK(Place::inf().str() == "inf");
    CHECK(Place::finite(Integer(7)).str() == "7");
}

TEST_CASE("p-adic order") {
    CHECK(ord_p(Rat(12), Integer(2)) == 2);
    CHECK(ord_p(Rat(12), Integer(3)) == 1);
    CHECK(ord_p(Rat(12), Integer(5)) == 0);
    CHECK(ord_p(Rat(Integer(1), Integer(8)), Integer(2)) == -3);
    CHECK(ord_p(Rat(Integer(9), Integer(4)), Integer(2)) == -2);
    CHECK(ord_p(Rat(Integer(9), Integer(4)), Integer(3)) == 2);
    CHECK(ord_p(Rat(-18), Integer(3)) == 2);
    CHECK_THROWS(ord_p(Rat(0), Integer(2)));
}

TEST_CASE("normalized absolute values") {
    CHECK(abs_value(Rat(-5), Place::inf()) == Rat(5));
    CHECK(abs_value(Rat(12), Place::finite(Integer(2))) == Rat(Integer(1), Integer(4)));
    CHECK(abs_value(Rat(Integer(1), Integer(6)), Place::finite(Integer(3))) == Rat(3));
    CHECK(abs_value(Rat(0), Place::inf()) == Rat(0));
    CHECK(abs_value(Rat(0), Place::finite(Integer(7))) == Rat(0));
    CHECK(abs_value(Rat(Integer(10), Integer(21)), Place::finite(Integer(5))) ==
          Rat(Integer(1), Integer(5)));
}

TEST_CASE("factorization") {
    auto f = factor(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Integer, unsigned long>(Integer(2), 3ul));
    CHECK(f[1] == std::pair<Integer, unsigned long>(Integer(3), 2ul));
    CHECK(f[2] == std::pair<Integer, unsigned long>(Integer(5), 1ul));
    CHECK(factor(Integer(1)).empty());
    auto big = factor(Integer("600851475143"));  // 71 * 839 * 1471 * 6857
    REQUIRE(big.size() == 4);
    CHECK(big[3].first == 6857);

    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer(97)));
    CHECK(!is_prime(Integer(1)));
    CHECK(!is_prime(Integer(91)));
    CHECK(is_prime(Integer("32416190071")));
}

TEST_CASE("product formula is exactly 1") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    for (int i = 0; i < 500; ++i) {
        long n = num(rng);
        if (n == 0) continue;
        Rat x(Integer(n), Integer(den(rng)));
        CHECK(product_formula_check(x) == Rat(1));
    }
    CHECK(product_formula_check(Rat(1)) == Rat(1));
    CHECK(product_formula_check(Rat(-1)) == Rat(1));
}

TEST_CASE("exponent vectors reconstruct the value") {
    Rat x(Integer(40), Integer(27));
    auto ev = exponent_vector(x);
    Rat prod(1);
    for (const auto& [p, e] : ev) prod *= Rat(p).pow(e);
    CHECK(prod == x);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == std::pair<Integer, long>(Integer(2), 3L));
    CHECK(ev[1] == std::pair<Integer, long>(Integer(3), -3L));
    CHECK(ev[2] == std::pair<Integer, long>(Integer(5), 1L));
    CHECK(exponent_vector(Rat(1)).empty());
}

TEST_CASE("exact log ratios via multiplicative dependence") {
    auto r = log_ratio_exact(Rat(8), Rat(2));
    REQUIRE(r.has_value());
    CHECK(*r == Rat(3));
    r = log_ratio_exact(Rat(Integer(1), Integer(9)), Rat(3));
    REQUIRE(r.has_value());
    CHECK(*r == Rat(-2));
    r = log_ratio_exact(Rat(Integer(8), Integer(27)), Rat(Integer(2), Integer(3)));
    REQUIRE(r.has_value());
    CHECK(*r == Rat(3));
    r = log_ratio_exact(Rat(4), Rat(8));
    REQUIRE(r.has_value());
    CHECK(*r == Rat(Integer(2), Integer(3)));
    CHECK(log_ratio_exact(Rat(1), Rat(5)).value() == Rat(0));
    CHECK(!log_ratio_exact(Rat(5), Rat(10)).has_value());
    CHECK(!log_ratio_exact(Rat(Integer(3), Integer(2)), Rat(2)).has_value());
    CHECK(!log_ratio_exact(Rat(6), Rat(12)).has_value());
}

TEST_CASE("log ratio round trip on random powers") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> bn(2, 50), bd(1, 50), ex(-5, 5);
    for (int i = 0; i < 200; ++i) {
        Rat b(Integer(bn(rng)), Integer(bd(rng)));
        if (b == Rat(1)) continue;
        long e = ex(rng);
        auto r = log_ratio_exact(b.pow(e), b);
        REQUIRE(r.has_value());
        CHECK(*r == Rat(e));
    }
}
