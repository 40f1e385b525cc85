#include "subspace_lab/roth.hpp"

#include "subspace_lab/heights.hpp"
#include "subspace_lab/places.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace subspace_lab {

namespace {

struct ScanContext {
    NumberFieldPtr field;
    NFElem gen;           // xi as an element of Q(xi)
    long a = 0;           // delta = a/b, b > 0
    unsigned long b = 1;
    Interval xi_iv;       // coarse enclosure for candidate ranging
};

ScanContext make_context(const AlgebraicReal& xi, const Rat& delta) {
    if (xi.degree() < 2) throw config_error("scan requires an irrational algebraic number");
    if (!(delta > Rat(0) && delta <= Rat(1))) throw config_error("delta must lie in (0,1]");
    ScanContext ctx;
    ctx.field = std::make_shared<const NumberField>(xi);
    ctx.gen = NFElem::generator(ctx.field);
    if (mpz_sizeinbase(delta.num().get_mpz_t(), 2) > 24 ||
        mpz_sizeinbase(delta.den().get_mpz_t(), 2) > 24)
        throw config_error("delta too fine: " + delta.str());
    ctx.a = delta.num().get_si();
    ctx.b = delta.den().get_ui();
    ctx.xi_iv = xi.enclosure(32);
    return ctx;
}

// |xi - alpha|^b <= H^(-2b-a), both sides exact in Q(xi).
bool accepts(const ScanContext& ctx, const Rat& alpha, const Rat& h) {
    NFElem diff = ctx.gen - NFElem(alpha);
    NFElem lhs = pow(abs(diff), static_cast<long>(ctx.b));
    Rat rhs = h.pow(-2 * static_cast<long>(ctx.b) - ctx.a);
    return (lhs - NFElem(rhs)).sign() <= 0;
}

RothSolution make_solution(const ScanContext& ctx, const Rat& alpha, const Rat& h) {
    RothSolution s;
    s.alpha = alpha;
    s.height = h;
    NFElem diff = NFElem(alpha) - ctx.gen;
    s.side = diff.sign() > 0 ? Side::above : Side::below;
    Interval rhs = nth_root(Interval(h.pow(-2 * static_cast<long>(ctx.b) - ctx.a)), ctx.b, 64);
    s.margin = rhs - abs(diff.enclosure(64));
    return s;
}

// Scan denominators in [ylo, yhi], appending accepted solutions.
void scan_denominators(const ScanContext& ctx, const Integer& B, long ylo, long yhi,
                       std::vector<RothSolution>& out) {
    for (long y = ylo; y <= yhi; ++y) {
        Integer yz(y);
        // |xi - x/y| <= 1 is necessary, so x lies in [y(xi-1), y(xi+1)].
        Integer xlo = (ctx.xi_iv.lo * Rat(yz) - Rat(yz)).floor();
        Integer xhi = (ctx.xi_iv.hi * Rat(yz) + Rat(yz)).ceil();
        if (xlo < -B) xlo = -B;
        if (xhi > B) xhi = B;
        for (Integer x = xlo; x <= xhi; ++x) {
            if (gcd(x, yz) != 1) continue;
            Integer ax = x < 0 ? Integer(-x) : x;
            Integer hz = ax > yz ? ax : yz;
            if (hz > B) continue;
            Rat h{hz};
            Rat alpha = Rat(x, yz);
            if (accepts(ctx, alpha, h)) out.push_back(make_solution(ctx, alpha, h));
        }
    }
}

void sort_solutions(std::vector<RothSolution>& v) {
    std::sort(v.begin(), v.end(), [](const RothSolution& p, const RothSolution& q) {
        if (p.height != q.height) return p.height < q.height;
        return p.alpha < q.alpha;
    });
}

}  // namespace

std::vector<RothSolution> scan_roth(const AlgebraicReal& xi, const Rat& delta, const Rat& B,
                                    int threads) {
    std::vector<RothSolution> out;
    if (B < Rat(1)) return out;
    ScanContext ctx = make_context(xi, delta);
    Integer Bz = B.floor();
    if (mpz_sizeinbase(Bz.get_mpz_t(), 2) > 24) throw config_error("height bound too large to scan");
    long lb = Bz.get_si();

    int nthreads = threads < 1 ? 1 : threads;
    if (nthreads > lb) nthreads = static_cast<int>(lb);
    std::vector<std::vector<RothSolution>> parts(static_cast<std::size_t>(nthreads));
    if (nthreads == 1) {
        scan_denominators(ctx, Bz, 1, lb, parts[0]);
    } else {
        std::vector<std::thread> pool;
        long chunk = lb / nthreads, extra = lb % nthreads, start = 1;
        for (int t = 0; t < nthreads; ++t) {
            long len = chunk + (t < extra ? 1 : 0);
            long lo = start, hi = start + len - 1;
            start += len;
            pool.emplace_back([&, lo, hi, t] {
                scan_denominators(ctx, Bz, lo, hi, parts[static_cast<std::size_t>(t)]);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& p : parts)
        for (auto& s : p) out.push_back(std::move(s));
    sort_solutions(out);
    return out;
}

std::vector<RothSolution> scan_roth_convergent(const AlgebraicReal& xi, const Rat& delta,
                                               const Rat& B) {
    std::vector<RothSolution> out;
    if (B < Rat(1)) return out;
    ScanContext ctx = make_context(xi, delta);
    Integer Bz = B.floor();
    if (mpz_sizeinbase(Bz.get_mpz_t(), 2) > 24) throw config_error("height bound too large to scan");

    std::set<Rat> seen;
    auto consider = [&](const Rat& alpha) {
        Rat h = height_rational(alpha);
        if (h > Rat(Bz) || seen.count(alpha)) return;
        if (accepts(ctx, alpha, h)) {
            seen.insert(alpha);
            out.push_back(make_solution(ctx, alpha, h));
        }
    };

    // Exhaustive pass over heights H with H^a < 2^b (H^delta < 2). Above that
    // threshold |xi - alpha| < 1/(2 den^2), so alpha is a convergent.
    Integer two_b = pow_int(Integer(2), ctx.b);
    for (Integer h(1); pow_int(h, static_cast<unsigned long>(ctx.a)) < two_b && h <= Bz; ++h)
        for (Integer y(1); y <= h; ++y) {
            // candidates with max(|x|, y) == h
            for (Integer x = -h; x <= h; ++x) {
                Integer ax = x < 0 ? Integer(-x) : x;
                Integer mx = ax > y ? ax : y;
                if (mx != h || gcd(x, y) != 1) continue;
                consider(Rat(x, y));
            }
        }

    for (const Rat& c : xi.convergents(Bz)) consider(c);

    sort_solutions(out);
    return out;
}

SolutionClass classify_solution(const RothSolution& s, const AlgebraicReal& xi) {
    if (s.height < Rat(2)) return SolutionClass::small_solution;
    const long cap = precision_cap();
    for (long bits = 32; bits <= cap; bits *= 2) {
        Interval h = xi.height_enclosure(static_cast<unsigned long>(bits));
        if (s.height >= h.hi) return SolutionClass::large_solution;
        if (s.height < h.lo) return SolutionClass::small_solution;
    }
    throw undecided_comparison("height comparison with H(xi) undecided", cap);
}

std::vector<std::pair<RothSolution, RothSolution>> audit_gap_principle(
    const std::vector<RothSolution>& sols, const Rat& delta) {
    // A window [Q, Q^(1+delta/2)) with Q >= 2 containing both heights exists
    // iff H1 >= 2 and H2 < H1^(1+delta/2) (take Q = min(H1, H2)). With
    // delta = a/b this is H2^(2b) < H1^(2b+a), exact.
    if (mpz_sizeinbase(delta.num().get_mpz_t(), 2) > 24 ||
        mpz_sizeinbase(delta.den().get_mpz_t(), 2) > 24)
        throw config_error("delta too fine: " + delta.str());
    long a = delta.num().get_si();
    long b = static_cast<long>(delta.den().get_ui());
    std::vector<std::pair<RothSolution, RothSolution>> bad;
    for (std::size_t i = 0; i < sols.size(); ++i)
        for (std::size_t j = 0; j < sols.size(); ++j) {
            if (i == j) continue;
            const RothSolution &s1 = sols[i], &s2 = sols[j];
            if (s1.side != s2.side || s1.alpha == s2.alpha) continue;
            if (s1.height > s2.height || (s1.height == s2.height && i > j)) continue;
            if (s1.height < Rat(2)) continue;
            if (s2.height.pow(2 * b) < s1.height.pow(2 * b + a)) bad.emplace_back(s1, s2);
        }
    return bad;
}

Rat window_count(const Rat& E, const Rat& delta) {
    if (!(E > Rat(1))) throw config_error("E must exceed 1");
    if (!(delta > Rat(0) && delta <= Rat(1))) throw config_error("delta must lie in (0,1]");
    Rat base = Rat(1) + delta / Rat(2);
    if (auto r = log_ratio_exact(E, base)) {
        Rat v = Rat(1) + Rat(2) * *r;
        return Rat(v.ceil());
    }
    CReal v = CReal(1) + CReal(2) * CReal::ln(CReal(E)) / CReal::ln(CReal(base));
    return Rat(v.ceil());
}

RothBounds roth_bounds(long d, const Rat& delta, const CReal& h_xi) {
    if (d < 1) throw config_error("degree must be at least 1");
    if (!(delta > Rat(0) && delta <= Rat(1))) throw config_error("delta must lie in (0,1]");
    RothBounds rb;
    CReal ln2d = CReal::ln(CReal(Rat(2 * d)));
    Rat inv_delta = Rat(1) / delta;
    rb.large_bound = CReal(Rat(pow_int(Integer(2), 25)) * inv_delta.pow(3)) * ln2d *
                     CReal::ln(CReal(inv_delta) * ln2d);
    rb.small_bound = CReal(Rat(10) * inv_delta) * CReal::ln(CReal::ln(max(h_xi, CReal(4))));
    rb.m = 1 + (CReal(Rat(25600) * inv_delta.pow(2)) * ln2d).floor();
    Rat mr{rb.m};
    rb.omega = Rat(162) * mr * mr * inv_delta;
    Rat binom_d2 = Rat(d) * Rat(d - 1) / Rat(2);
    // (240 m^2/delta)^m stays a lazy power so building the struct is cheap.
    rb.c_log = CReal(Rat(3) * mr * binom_d2 * inv_delta) *
               CReal(Rat(240) * mr * mr * inv_delta).pow_int(rb.m.get_si()) *
               CReal::ln(CReal(36) * h_xi);
    if (d == 1) {
        rb.c_log_ln = CReal(0);  // the binomial factor vanishes, c_log is exactly 0
    } else {
        // 36 H(xi) > e and every rational factor exceeds 1, so each log is positive.
        rb.c_log_ln = CReal::ln(CReal(Rat(3) * mr * binom_d2 * inv_delta)) +
                      CReal(mr) * CReal::ln(CReal(Rat(240) * mr * mr * inv_delta)) +
                      CReal::ln(CReal::ln(CReal(36) * h_xi));
    }
    rb.outside_valid_range = (d == 1);
    return rb;
}

}  // namespace subspace_lab
