#include "subspace_lab/places.hpp"

#include <algorithm>
#include <map>

namespace subspace_lab {

long ord_p(const Rat& x, const Integer& p) {
    if (x.is_zero()) throw invariant_violation("ord_p of zero");
    long ord = 0;
    Integer n = x.num();
    Integer d = x.den();
    Integer q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++ord;
    }
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        d = q;
        --ord;
    }
    return ord;
}

Rat abs_value(const Rat& x, const Place& v) {
    if (x.is_zero()) return Rat(0);
    if (v.infinite) return abs(x);
    long ord = ord_p(x, v.p);
    if (ord >= 0) return Rat(Integer(1), pow_int(v.p, static_cast<unsigned long>(ord)));
    return Rat(pow_int(v.p, static_cast<unsigned long>(-ord)));
}

Rat product_formula_check(const Rat& x) {
    if (x.is_zero()) throw invariant_violation("product formula needs nonzero input");
    Rat prod = abs(x);
    for (const auto& [p, e] : exponent_vector(abs(x))) {
        (void)e;
        prod = prod * abs_value(x, Place::finite(p));
    }
    return prod;
}

namespace {

Integer gcd_z(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Deterministic Miller-Rabin witness set valid for n < 3.3e24; for larger n
// mpz_probab_prime_p with 40 rounds (error probability below 2^-80).
bool miller_rabin(const Integer& n) {
    int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
    return r > 0;
}

Integer pollard_rho(const Integer& n) {
    // n odd composite, not a prime power of small primes.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEUL);
    for (;;) {
        Integer c = rng.get_z_range(n - 3) + 1;
        Integer x = rng.get_z_range(n - 2) + 2;
        Integer y = x;
        Integer d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle without factor, retry with new c
            d = gcd_z(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(Integer n, std::map<Integer, unsigned long>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return miller_rabin(n);
}

std::vector<std::pair<Integer, unsigned long>> factor(Integer n) {
    if (n < 1) throw invariant_violation("factor needs n >= 1");
    std::map<Integer, unsigned long> acc;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[Integer(static_cast<long>(p))];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    // Trial division by 6k+-1 up to 1e6.
    unsigned long d = 41;
    while (d <= 1000000UL && n > 1) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++acc[Integer(static_cast<long>(d))];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
        d += 2;
    }
    if (n > 1) factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<std::pair<Integer, long>> exponent_vector(const Rat& x) {
    if (x.sign() <= 0) throw invariant_violation("exponent_vector needs x > 0");
    std::map<Integer, long> exps;
    for (const auto& [p, e] : factor(x.num())) exps[p] += static_cast<long>(e);
    for (const auto& [p, e] : factor(x.den())) exps[p] -= static_cast<long>(e);
    return {exps.begin(), exps.end()};
}

std::optional<Rat> log_ratio_exact(const Rat& a, const Rat& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw invariant_violation("log_ratio_exact needs positive inputs");
    if (b == Rat(1)) throw invariant_violation("log_ratio_exact base 1");
    auto va = exponent_vector(a);
    auto vb = exponent_vector(b);
    if (va.empty()) return Rat(0);  // a == 1
    if (vb.empty()) return std::nullopt;
    // Require identical support and proportional exponents.
    if (va.size() != vb.size()) return std::nullopt;
    Rat ratio(va[0].second, vb[0].second == 0 ? 1 : vb[0].second);
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i].first != vb[i].first) return std::nullopt;
        if (vb[i].second == 0) return std::nullopt;
        if (Rat(va[i].second, 1) != ratio * Rat(vb[i].second, 1)) return std::nullopt;
    }
    return ratio;
}

}  // namespace subspace_lab
