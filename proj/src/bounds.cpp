#include "subspace_lab/bounds.hpp"

#include "subspace_lab/places.hpp"

namespace subspace_lab {

namespace {

void check_inputs(long n, const Rat& delta, long R, long D) {
    if (n < 2) throw config_error("bounds require n >= 2");
    if (delta <= Rat(0) || delta > Rat(1)) throw config_error("delta must lie in (0,1]");
    if (R < 1 || D < 1) throw config_error("bounds require R >= 1 and D >= 1");
}

// Fill display and log_form from value / ln_value: plain decimal enclosure
// up to 2^1024, base-2 log form beyond.
void finish_display(BoundReport& rep) {
    if (!rep.ln_value) {
        if (rep.value) rep.display = decimal_enclosure(rep.value->enclosure(64), 8);
        return;
    }
    rep.display = magnitude_display(*rep.value, *rep.ln_value);
    rep.log_form = rep.display.rfind("2^", 0) == 0;
}

}  // namespace

std::string magnitude_display(const CReal& value, const CReal& ln_value) {
    Interval lv = ln_value.enclosure(48);
    Interval l2 = ln_rat(Rat(2), 48);
    if (lv.hi < Rat(1024) * l2.lo) return decimal_enclosure(value.enclosure(64), 8);
    CReal log2v = ln_value / CReal::ln2();
    return "2^" + decimal_enclosure(log2v.enclosure(64), 8);
}

BoundReport subspace_count_bound(long n, const Rat& delta, long R, long D) {
    check_inputs(n, delta, R, D);
    BoundReport rep;
    rep.name = "subspace_count";
    Rat pref = Rat(pow_int(Integer(10), 9)) *
               Rat(pow_int(Integer(2), static_cast<unsigned long>(2 * n))) *
               Rat(pow_int(Integer(n), 14)) / delta.pow(3);
    CReal L1 = CReal::ln(CReal(Rat(3) * Rat(R) * Rat(D) / delta));
    CReal inner = CReal(Rat(1) / delta) * CReal::ln(CReal(Rat(3 * R * D)));
    CReal L2 = CReal::ln(inner);
    rep.value = CReal(pref) * L1 * L2;
    // 3RD >= 3 makes the inner factor exceed ln 3 > 1, so both logs are positive.
    rep.ln_value = CReal::ln(CReal(pref)) + CReal::ln(L1) + CReal::ln(L2);
    finish_display(rep);
    return rep;
}

ThresholdedBound thresholded_count_bound(long n, const Rat& delta, long R, long D,
                                         const Rat& H) {
    check_inputs(n, delta, R, D);
    if (H < Rat(1)) throw config_error("bounds require H >= 1");
    ThresholdedBound out;
    out.report.name = "thresholded_count";
    Rat rd2 = Rat(2 * R * D);
    // lnln(2RD) is positive iff 2RD > e; rationals never equal e, so the
    // interval test below terminates.
    bool in_range = false;
    for (unsigned long bits = 32;; bits *= 2) {
        Interval l = ln_rat(rd2, bits);
        if (l.lo > Rat(1)) {
            in_range = true;
            break;
        }
        if (l.hi < Rat(1)) break;
        if (static_cast<long>(bits) > precision_cap())
            throw undecided_comparison("ln(2RD) vs 1", precision_cap());
    }
    Rat pref = Rat(pow_int(Integer(4), static_cast<unsigned long>((n + 9) * (n + 9)))) /
               delta.pow(n + 4);
    CReal l = CReal::ln(CReal(rd2));
    CReal ll = CReal::ln(l);
    out.report.value = CReal(pref) * l * ll;
    if (in_range) {
        out.report.ln_value = CReal::ln(CReal(pref)) + CReal::ln(l) + CReal::ln(ll);
    } else {
        out.report.outside_range = true;
    }
    finish_display(out.report);

    auto [a, b] = [&] {
        Integer num = delta.num(), den = delta.den();
        return std::pair<long, unsigned long>{num.get_si(), den.get_ui()};
    }();
    unsigned long nb2 = static_cast<unsigned long>(2 * n) * b;
    Rat big = Rat(pow_int(Integer(n), nb2));
    out.threshold_from_height = (Rat(2) * H).pow(a) >= big;
    out.threshold = out.threshold_from_height
                        ? CReal(Rat(2) * H)
                        : CReal(big).nth_root(static_cast<unsigned long>(a));
    return out;
}

IteratedLogBound iterated_log_count_bound(long n, const Rat& delta) {
    if (n < 2) throw config_error("bounds require n >= 2");
    if (delta <= Rat(0) || delta > Rat(1)) throw config_error("delta must lie in (0,1]");
    IteratedLogBound out;
    out.log2_log2 = Rat(27 * n) / (delta * delta);
    out.report.name = "iterated_log_count";
    out.report.log_form = true;
    out.report.display = "2^2^" + out.log2_log2.str();
    // ln of 2^(2^t) = 2^t ln 2 with t = p/q: (2^p)^(1/q) ln 2.
    Integer p = out.log2_log2.num();
    unsigned long q = out.log2_log2.den().get_ui();
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 20)
        throw config_error("iterated exponent too large to evaluate");
    CReal pow2 = CReal(Rat(pow_int(Integer(2), p.get_ui()))).nth_root(q);
    out.report.ln_value = pow2 * CReal::ln2();
    return out;
}

LadderConstants ladder_constants(long n, const Rat& delta, long R, long D) {
    check_inputs(n, delta, R, D);
    LadderConstants out;
    Rat pref = Rat(pow_int(Integer(10), 8)) *
               Rat(pow_int(Integer(2), static_cast<unsigned long>(2 * n))) *
               Rat(pow_int(Integer(n), 14)) / (delta * delta);
    // The log factor is transcendental, so the product is never an exact
    // integer and the floor below terminates.
    CReal val = CReal(pref) * CReal::ln(CReal(Rat(3) * Rat(R) * Rat(D) / delta));
    out.m = val.floor();
    out.omega = CReal(Rat(3 * n) / delta) * CReal::ln(CReal(Rat(3 * R * D)));
    return out;
}

Integer window_total(const Integer& m, const Rat& omega, long n, const Rat& delta) {
    if (m < 1) throw config_error("window_total requires m >= 1");
    if (omega <= Rat(1)) throw config_error("window_total requires omega > 1");
    Rat rho = Rat(1) + delta / Rat(2 * n);
    Integer k;
    if (auto r = log_ratio_exact(omega, rho)) {
        k = r->floor();
    } else {
        CReal x = CReal::ln(CReal(omega)) / CReal::ln(CReal(rho));
        k = x.floor();
    }
    return Integer(m * (1 + k) + 1);
}

Integer window_total(const Integer& m, const CReal& omega, long n, const Rat& delta) {
    if (m < 1) throw config_error("window_total requires m >= 1");
    Rat rho = Rat(1) + delta / Rat(2 * n);
    CReal x = CReal::ln(omega) / CReal::ln(CReal(rho));
    Integer k = x.floor();
    return Integer(m * (1 + k) + 1);
}

}  // namespace subspace_lab
