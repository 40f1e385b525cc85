#include "subspace_lab/algebraic.hpp"

#include "subspace_lab/places.hpp"
#include "subspace_lab/roots.hpp"

#include <mutex>

namespace subspace_lab {

struct AlgebraicReal::State {
    Poly minpoly;  // integer coefficients, content 1, positive lead
    mutable std::mutex mu;
    mutable Interval best{Rat(0)};
    mutable bool roots_isolated = false;
    mutable std::vector<Interval> real_roots;  // every real root of minpoly
    mutable std::vector<Box> complex_pairs;    // upper-half-plane representatives
};

namespace {

std::vector<Integer> divisors_of(const Integer& n_in) {
    Integer n = n_in < 0 ? Integer(-n_in) : n_in;
    if (n == 0) throw invariant_violation("divisors of zero");
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factor(n)) {
        std::size_t base = divs.size();
        Integer pk(1);
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

bool has_rational_root(const Poly& p) {
    // Candidates r/s with r | p(0), s | lead (content-1 integer poly).
    if (p.coeff(0).is_zero()) return true;
    auto rs = divisors_of(p.coeff(0).num());
    auto ss = divisors_of(p.lead().num());
    for (const auto& s : ss)
        for (const auto& r : rs) {
            Rat cand(r, s);
            if (p.eval(cand).is_zero() || p.eval(-cand).is_zero()) return true;
        }
    return false;
}

// Does an integer quartic with nonzero constant term split into two integer
// quadratics (e x^2 + f x + g)(h x^2 + i x + j)? Linear factors are handled
// separately, so together with the rational root test this decides
// irreducibility at degree 4.
bool quartic_splits_into_quadratics(const Poly& p) {
    const Integer a4 = p.coeff(4).num(), a3 = p.coeff(3).num(), a2 = p.coeff(2).num(),
                  a1 = p.coeff(1).num(), a0 = p.coeff(0).num();
    auto check2 = [&](const Integer& e, const Integer& f, const Integer& g) {
        Poly quad = Poly({Rat(g), Rat(f), Rat(e)});
        auto [q, r] = Poly::divmod(p, quad);
        (void)q;
        return r.is_zero();
    };
    for (const Integer& e : divisors_of(a4)) {
        Integer h = a4 / e;  // both leads positive w.l.o.g.
        for (Integer g : divisors_of(a0)) {
            for (int gs = 0; gs < 2; ++gs, g = -g) {
                Integer j = a0 / g;
                // f h + i e = a3,  f j + i g = a1,  f i + e j + g h = a2.
                Integer D = h * g - e * j;
                if (D != 0) {
                    Integer fn = a3 * g - a1 * e, in = a1 * h - a3 * j;
                    if (fn % D != 0 || in % D != 0) continue;
                    Integer f = fn / D, i = in / D;
                    if (f * i + e * j + g * h == a2 && check2(e, f, g)) return true;
                } else {
                    if (a1 * h != a3 * j) continue;  // inconsistent pair
                    Integer dd = gcd(h, e);
                    if (a3 % dd != 0) continue;
                    // One solution of f h + i e = a3, then the family
                    // f = f0 + (e/dd) t, i = i0 - (h/dd) t.
                    Integer u, v, gg;
                    mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                               h.get_mpz_t(), e.get_mpz_t());
                    Integer f0 = u * (a3 / dd), i0 = v * (a3 / dd);
                    Integer U = e / dd, W = h / dd;
                    // (f0 + U t)(i0 - W t) = a2 - e j - g h.
                    Integer A = -U * W, B = U * i0 - W * f0, C = f0 * i0 - (a2 - e * j - g * h);
                    Integer disc = B * B - 4 * A * C;
                    if (disc < 0) continue;
                    bool exact = false;
                    Integer rt = iroot_floor(disc, 2, &exact);
                    if (!exact) continue;
                    Integer den = 2 * A;
                    Integer cand1 = -B + rt, cand2 = -B - rt;
                    for (const Integer& num : {cand1, cand2}) {
                        if (num % den != 0) continue;
                        Integer t = num / den;
                        if (check2(e, f0 + U * t, g)) return true;
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

AlgebraicReal::AlgebraicReal(const Poly& minpoly, const Interval& isolating) {
    Poly P = minpoly.integer_normalized();
    if (P.degree() < 1) throw config_error("minimal polynomial must be nonconstant");
    Poly g = gcd(P, P.derivative());
    if (g.degree() > 0) throw config_error("minimal polynomial is not squarefree");
    if (P.degree() >= 2) {
        if (P.coeff(0).is_zero() || has_rational_root(P))
            throw config_error("minimal polynomial has a rational root");
        if (P.degree() == 4 && quartic_splits_into_quadratics(P))
            throw config_error("quartic minimal polynomial is reducible");
    }
    auto st = std::make_shared<State>();
    st->minpoly = P;
    if (P.degree() == 1) {
        Rat value = -P.coeff(0) / P.coeff(1);
        if (value < isolating.lo || isolating.hi < value)
            throw config_error("isolating interval misses the rational root");
        st->best = Interval(value);
    } else {
        if (P.eval(isolating.lo).is_zero() || P.eval(isolating.hi).is_zero())
            throw config_error("isolating interval endpoint is a root");
        auto chain = sturm_sequence(P);
        if (sturm_count(chain, isolating.lo, isolating.hi) != 1)
            throw config_error("interval does not isolate exactly one root");
        st->best = isolating;
    }
    st_ = std::move(st);
}

AlgebraicReal AlgebraicReal::from_rational(const Rat& r) {
    Poly p({-r, Rat(1)});
    return AlgebraicReal(p, Interval(r));
}

const Poly& AlgebraicReal::minpoly() const { return st_->minpoly; }
long AlgebraicReal::degree() const { return st_->minpoly.degree(); }
bool AlgebraicReal::is_rational() const { return degree() == 1; }

Rat AlgebraicReal::rational_value() const {
    if (!is_rational()) throw invariant_violation("irrational algebraic number");
    return -st_->minpoly.coeff(0) / st_->minpoly.coeff(1);
}

Interval AlgebraicReal::enclosure(unsigned long bits) const {
    std::lock_guard<std::mutex> lk(st_->mu);
    Rat target = Rat(Integer(1), pow_int(Integer(2), bits));
    if (st_->best.width() <= target) return st_->best;
    st_->best = refine_real_root(st_->minpoly, st_->best, bits);
    return st_->best;
}

int AlgebraicReal::sign_of_poly(const Poly& g) const {
    auto [q, r] = Poly::divmod(g, st_->minpoly);
    (void)q;
    if (r.is_zero()) return 0;
    if (r.degree() == 0) return r.coeff(0).sign();
    const long cap = precision_cap();
    for (long bits = 64; bits <= cap; bits *= 2) {
        Interval iv = enclosure(static_cast<unsigned long>(bits));
        int s = r.eval(iv).determined_sign();
        if (s == -1 || s == 0 || s == 1) return s;
    }
    throw undecided_comparison("sign of polynomial at algebraic point undecided", cap);
}

int AlgebraicReal::compare(const Rat& r) const {
    if (is_rational()) {
        Rat v = rational_value();
        return v < r ? -1 : (v == r ? 0 : 1);
    }
    return sign_of_poly(Poly({-r, Rat(1)}));
}

Integer AlgebraicReal::floor_value() const {
    if (is_rational()) return rational_value().floor();
    const long cap = precision_cap();
    for (long bits = 32; bits <= cap; bits *= 2) {
        Interval iv = enclosure(static_cast<unsigned long>(bits));
        Integer flo = iv.lo.floor(), fhi = iv.hi.floor();
        if (flo == fhi) return flo;
        // Endpoint may be the integer itself; settle exactly.
        if (fhi == flo + 1 && compare(Rat(fhi)) >= 0) return fhi;
        if (fhi == flo + 1) return flo;
    }
    throw undecided_comparison("floor of algebraic number undecided", cap);
}

Interval AlgebraicReal::height_enclosure(unsigned long bits) const {
    const long d = degree();
    if (is_rational()) {
        Rat v = rational_value();
        Integer n = abs(v).num(), d = v.den();
        Integer h = n > d ? n : d;
        return Interval(Rat(h));
    }
    {
        std::lock_guard<std::mutex> lk(st_->mu);
        if (!st_->roots_isolated) {
            st_->real_roots = isolate_real_roots(st_->minpoly);
            st_->complex_pairs = isolate_complex_pairs(st_->minpoly);
            st_->roots_isolated = true;
        }
    }
    const long cap = precision_cap();
    Rat target = Rat(Integer(1), pow_int(Integer(2), bits));
    for (long wb = static_cast<long>(bits) + 16; wb <= cap; wb *= 2) {
        auto wbu = static_cast<unsigned long>(wb);
        Interval prod(st_->minpoly.lead());
        {
            std::lock_guard<std::mutex> lk(st_->mu);
            for (auto& riv : st_->real_roots) {
                riv = refine_real_root(st_->minpoly, riv, wbu);
                prod = round_out(prod * max(Interval(Rat(1)), abs(riv)), wbu);
            }
            for (auto& box : st_->complex_pairs) {
                box = refine_complex_root(st_->minpoly, box, wbu);
                prod = round_out(prod * max(Interval(Rat(1)), mag_sq(box)), wbu);
            }
        }
        Interval h = nth_root(prod, static_cast<unsigned long>(d), wbu);
        if (h.width() <= target) return h;
    }
    throw undecided_comparison("height enclosure did not converge", cap);
}

std::vector<Rat> AlgebraicReal::convergents(const Integer& qmax) const {
    std::vector<Rat> out;
    if (qmax < 1) return out;
    if (is_rational()) {
        // Plain Euclidean continued fraction of p/q.
        Rat x = rational_value();
        Integer pm1(1), pm2(0), qm1(0), qm2(1);  // p_{-1}=1, p_{-2}=0, ...
        for (;;) {
            Integer a = x.floor();
            Integer pk = a * pm1 + pm2, qk = a * qm1 + qm2;
            if (qk > qmax) break;
            out.emplace_back(pk, qk);
            Rat frac = x - Rat(a);
            if (frac.is_zero()) break;
            x = frac.inv();
            pm2 = pm1; pm1 = pk; qm2 = qm1; qm1 = qk;
        }
        return out;
    }
    // x_{k+1} = -(q_{k-1} xi - p_{k-1}) / (q_k xi - p_k); each partial
    // quotient is the floor of an integer Moebius image of xi, decided by
    // refining the enclosure (the image is irrational, so this terminates).
    const long cap = precision_cap();
    auto mobius_floor = [&](const Integer& a, const Integer& b, const Integer& c,
                            const Integer& d) -> Integer {
        for (long bits = 64; bits <= cap; bits *= 2) {
            Interval iv = enclosure(static_cast<unsigned long>(bits));
            Interval den = iv * Rat(c) + Interval(Rat(d));
            if (den.contains_zero()) continue;
            Interval q = (iv * Rat(a) + Interval(Rat(b))) / den;
            Integer flo = q.lo.floor(), fhi = q.hi.floor();
            if (flo == fhi) return flo;
        }
        throw undecided_comparison("continued fraction quotient undecided", cap);
    };
    Integer a0 = floor_value();
    Integer pk = a0, qk(1), pk1(1), qk1(0);  // p_0/q_0 and p_{-1}/q_{-1}
    if (qk <= qmax) out.emplace_back(pk, qk);
    for (;;) {
        Integer a = mobius_floor(-qk1, pk1, qk, -pk);
        Integer pn = a * pk + pk1, qn = a * qk + qk1;
        if (qn > qmax) break;
        out.emplace_back(pn, qn);
        pk1 = pk; qk1 = qk; pk = pn; qk = qn;
    }
    return out;
}

std::string AlgebraicReal::str() const {
    if (is_rational()) return rational_value().str();
    return "root of " + st_->minpoly.str() + " in " + st_->best.str();
}

Interval mahler_height_enclosure(const Poly& p_in, unsigned long bits) {
    Poly p = p_in.integer_normalized();
    const long d = p.degree();
    if (d < 1) throw invariant_violation("mahler height of a constant");
    if (d == 1) {
        Integer n = abs(p.coeff(0)).num(), l = p.coeff(1).num();
        return Interval(Rat(n > l ? n : l));
    }
    std::vector<Interval> reals = isolate_real_roots(p);
    std::vector<Box> pairs = isolate_complex_pairs(p);
    const long cap = precision_cap();
    Rat target = Rat(Integer(1), pow_int(Integer(2), bits));
    for (long wb = static_cast<long>(bits) + 16; wb <= cap; wb *= 2) {
        auto wbu = static_cast<unsigned long>(wb);
        Interval prod(p.lead());
        for (auto& riv : reals) {
            riv = refine_real_root(p, riv, wbu);
            prod = round_out(prod * max(Interval(Rat(1)), abs(riv)), wbu);
        }
        for (auto& box : pairs) {
            box = refine_complex_root(p, box, wbu);
            prod = round_out(prod * max(Interval(Rat(1)), mag_sq(box)), wbu);
        }
        Interval h = nth_root(prod, static_cast<unsigned long>(d), wbu);
        if (h.width() <= target) return h;
    }
    throw undecided_comparison("height enclosure did not converge", cap);
}

}  // namespace subspace_lab
