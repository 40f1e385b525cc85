#include "subspace_lab/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>

namespace subspace_lab {

namespace {

// Bisection point that avoids landing on a root of p.
Rat nonroot_point(const Poly& p, const Rat& a, const Rat& b) {
    Rat mid = (a + b) / Rat(2);
    Rat step = (b - a) / Rat(4);
    while (p.eval(mid).is_zero() || mid <= a || mid >= b) {
        mid += step;
        step = step / Rat(2);
        if (step.is_zero()) throw invariant_violation("nonroot_point: exhausted");
    }
    return mid;
}

void isolate_rec(const Poly& p, const std::vector<Poly>& chain, const Rat& a,
                 const Rat& b, std::vector<Interval>& out) {
    long n = sturm_count(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        // tighten to a sign-bracketing or point interval
        Rat lo = a, hi = b;
        while (true) {
            if (p.eval(hi).is_zero()) {
                out.push_back(Interval(hi));
                return;
            }
            int slo = p.eval(lo).sign(), shi = p.eval(hi).sign();
            if (slo != 0 && slo != shi) {
                out.push_back(Interval(lo, hi));
                return;
            }
            // p(lo) = 0 (left endpoint root excluded from (lo, hi]) or equal
            // signs: the root is interior; shrink from the left.
            Rat mid = nonroot_point(p, lo, hi);
            if (sturm_count(chain, mid, hi) == 1) lo = mid;
            else hi = mid;
        }
    }
    Rat mid = nonroot_point(p, a, b);
    isolate_rec(p, chain, a, mid, out);
    if (p.eval(mid).is_zero()) out.push_back(Interval(mid));
    isolate_rec(p, chain, mid, b, out);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const Poly& p) {
    std::vector<Interval> out;
    if (p.degree() <= 0) return out;
    Poly sf = squarefree_part(p);
    auto chain = sturm_sequence(sf);
    Rat b = cauchy_root_bound(sf);
    Rat a = -b;
    // roots lie strictly inside (-b, b); endpoints are not roots
    isolate_rec(sf, chain, a, b, out);
    std::sort(out.begin(), out.end(),
              [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
    return out;
}

Interval refine_real_root(const Poly& p, Interval iv, unsigned long bits) {
    if (iv.is_point()) return iv;
    Rat target = Rat(Integer(1), pow_int(Integer(2), bits));
    Poly dp = p.derivative();
    int slo = p.eval(iv.lo).sign();
    if (slo == 0 || slo == p.eval(iv.hi).sign())
        throw invariant_violation("refine_real_root: not a sign-bracketing interval");
    unsigned long work_bits = bits + 16;
    while (iv.width() > target) {
        // interval Newton first: quadratic once derivative is sign-stable
        bool shrunk = false;
        Interval dpx = dp.eval(iv);
        if (!dpx.contains_zero()) {
            Rat m = iv.mid();
            Rat pm = p.eval(m);
            if (pm.is_zero()) return Interval(m);
            Interval n = Interval(m) - Interval(pm) / dpx;
            Rat nlo = max(n.lo, iv.lo), nhi = min(n.hi, iv.hi);
            if (nlo <= nhi && (nhi - nlo) < iv.width() * Rat(Integer(3), Integer(4))) {
                Interval cand(nlo, nhi);
                // keep the bracketing invariant by clipping at sign changes
                int sl = p.eval(cand.lo).sign();
                int sh = p.eval(cand.hi).sign();
                if (sl == 0) return Interval(cand.lo);
                if (sh == 0) return Interval(cand.hi);
                if (sl != sh) {
                    iv = Interval(dyadic_floor(cand.lo, work_bits),
                                  dyadic_ceil(cand.hi, work_bits));
                    if (p.eval(iv.lo).sign() == 0) return Interval(iv.lo);
                    if (p.eval(iv.hi).sign() == 0) return Interval(iv.hi);
                    if (p.eval(iv.lo).sign() != p.eval(iv.hi).sign()) shrunk = true;
                    else iv = cand;  // rounding spoiled the bracket; use exact
                    shrunk = true;
                }
            }
        }
        if (!shrunk) {
            Rat m = nonroot_point(p, iv.lo, iv.hi);
            if (p.eval(iv.lo).sign() != p.eval(m).sign()) iv = Interval(iv.lo, m);
            else iv = Interval(m, iv.hi);
        }
        if (iv.width() <= target) break;
    }
    return iv;
}

namespace {

struct QC {  // complex rational point
    Rat re, im;
};

QC eval_point(const Poly& p, const QC& z) {
    QC acc{Rat(0), Rat(0)};
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        Rat re = acc.re * z.re - acc.im * z.im + p.coeff(i);
        Rat im = acc.re * z.im + acc.im * z.re;
        acc = {re, im};
    }
    return acc;
}

QC round_qc(const QC& z, unsigned long bits) {
    return {dyadic_floor(z.re, bits), dyadic_floor(z.im, bits)};
}

// One Newton step z - p(z)/p'(z) in exact complex rationals, then rounded.
QC newton_polish(const Poly& p, const Poly& dp, QC z, int steps, unsigned long bits) {
    for (int s = 0; s < steps; ++s) {
        QC f = eval_point(p, z), d = eval_point(dp, z);
        Rat den = d.re * d.re + d.im * d.im;
        if (den.is_zero()) return z;
        Rat qre = (f.re * d.re + f.im * d.im) / den;
        Rat qim = (f.im * d.re - f.re * d.im) / den;
        z = round_qc({z.re - qre, z.im - qim}, bits);
    }
    return z;
}

// Interval Newton certificate: exactly one root in box if N(box) interior.
bool newton_certifies(const Poly& p, const Poly& dp, const Box& box, Box* refined) {
    Box dbox = dp.eval(box);
    if (dbox.contains_zero()) return false;
    Box m(Interval(box.re.mid()), Interval(box.im.mid()));
    Box n = m - p.eval(m) / dbox;
    if (!box_subset_interior(n, box)) return false;
    if (refined) *refined = n;
    return true;
}

Box box_around(const QC& z, const Rat& r) {
    return Box(Interval(z.re - r, z.re + r), Interval(z.im - r, z.im + r));
}

}  // namespace

std::vector<Box> isolate_complex_pairs(const Poly& p) {
    std::vector<Box> out;
    if (p.degree() <= 1) return out;
    Poly sf = squarefree_part(p);
    long d = sf.degree();
    long n_real = static_cast<long>(isolate_real_roots(sf).size());
    long n_pairs = (d - n_real) / 2;
    if (n_pairs == 0) return out;

    Poly dp = sf.derivative();
    Poly monic = sf.monic();

    // double-precision seeds from the companion matrix
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (long i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (long i = 0; i < d; ++i) companion(i, d - 1) = -monic.coeff(i).to_double();
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    std::vector<std::complex<double>> seeds;
    for (long i = 0; i < d; ++i) {
        std::complex<double> z = es.eigenvalues()(i);
        if (z.imag() > 0) seeds.push_back(z);
    }
    std::sort(seeds.begin(), seeds.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    for (unsigned long polish_bits = 64; polish_bits <= 4096; polish_bits *= 2) {
        out.clear();
        bool ok = static_cast<long>(seeds.size()) == n_pairs;
        for (size_t k = 0; ok && k < seeds.size(); ++k) {
            QC z{Rat(mpq_class(seeds[k].real())), Rat(mpq_class(seeds[k].imag()))};
            z = newton_polish(sf, dp, z, static_cast<int>(polish_bits / 16), polish_bits);
            bool cert = false;
            for (long e = 8; e <= static_cast<long>(polish_bits); e *= 2) {
                Rat r = Rat(Integer(1), pow_int(Integer(2), polish_bits / 2)) * Rat(pow_int(Integer(2), e));
                Box cand = box_around(z, r);
                if (cand.im.lo.sign() <= 0) continue;  // must stay off the real axis
                if (newton_certifies(sf, dp, cand, nullptr)) {
                    out.push_back(cand);
                    cert = true;
                    break;
                }
            }
            ok = cert;
        }
        if (ok) {
            // pairwise disjoint => d distinct roots accounted for
            bool dis = true;
            for (size_t i = 0; i < out.size() && dis; ++i)
                for (size_t j = i + 1; j < out.size() && dis; ++j)
                    if (!disjoint(out[i], out[j])) dis = false;
            if (dis) return out;
        }
    }
    throw invariant_violation("isolate_complex_pairs: certification failed");
}

Box refine_complex_root(const Poly& p, Box box, unsigned long bits) {
    Rat target = Rat(Integer(1), pow_int(Integer(2), bits));
    Poly sf = squarefree_part(p);
    Poly dp = sf.derivative();
    unsigned long work_bits = bits + 16;
    int stall = 0;
    while (box.width() > target) {
        Box dbox = dp.eval(box);
        if (dbox.contains_zero())
            throw invariant_violation("refine_complex_root: derivative box hit zero");
        Box m(Interval(box.re.mid()), Interval(box.im.mid()));
        Box n = m - sf.eval(m) / dbox;
        Interval nre(max(n.re.lo, box.re.lo), min(n.re.hi, box.re.hi));
        Interval nim(max(n.im.lo, box.im.lo), min(n.im.hi, box.im.hi));
        Box clipped(nre, nim);
        Box rounded = round_out(clipped, work_bits);
        Interval rre(max(rounded.re.lo, box.re.lo), min(rounded.re.hi, box.re.hi));
        Interval rim(max(rounded.im.lo, box.im.lo), min(rounded.im.hi, box.im.hi));
        Box next(rre, rim);
        if (next.width() >= box.width()) {
            if (++stall > 4) {
                work_bits *= 2;
                stall = 0;
            }
        }
        box = next;
    }
    return box;
}

}  // namespace subspace_lab
