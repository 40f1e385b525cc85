#include "subspace_lab/creal.hpp"

#include <mutex>

namespace subspace_lab {

namespace {

Rat two_pow_neg(unsigned long bits) { return Rat(Integer(1), pow_int(Integer(2), bits)); }

// Enclosure of 2*atanh(t) for rational t in [0, 1/3], width <= 2^-bits.
Interval atanh2_series(const Rat& t, unsigned long bits) {
    if (t.is_zero()) return Interval(Rat(0));
    if (t.sign() < 0 || Rat(3) * t > Rat(1)) throw invariant_violation("atanh2_series domain");
    const unsigned long guard = bits + 24;
    const Rat stop = two_pow_neg(bits + 8);
    const Rat t2 = t * t;
    Interval acc{Rat(0)};
    Interval tp{t};  // current odd power t^(2j+1), outward rounded
    for (long j = 0;; ++j) {
        acc = round_out(acc + tp * Rat(Integer(1), Integer(2 * j + 1)), guard);
        tp = round_out(tp * Interval(t2), guard);
        // Tail from exponent 2j+3 on: sum <= t^(2j+3) / (1 - t^2).
        Rat tail = tp.hi / (Rat(1) - t2);
        if (tail <= stop) {
            acc = acc + Interval(Rat(0), tail);
            break;
        }
        if (j > 200000) throw invariant_violation("atanh series did not converge");
    }
    return round_out(acc * Interval(Rat(2)), bits + 2);
}

Interval ln2_enclosure(unsigned long bits) {
    static std::mutex mu;
    static bool have = false;
    static Interval cached;
    std::lock_guard<std::mutex> lk(mu);
    if (have && cached.width() <= two_pow_neg(bits)) return cached;
    cached = atanh2_series(Rat(1, 3), bits);  // ln 2 = 2 atanh(1/3)
    have = true;
    return cached;
}

long bitlen(const Integer& z) {
    return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

}  // namespace

Interval ln_rat(const Rat& x, unsigned long bits) {
    if (x.sign() <= 0) throw std::domain_error("ln of nonpositive rational");
    long k = bitlen(x.num()) - bitlen(x.den());
    Rat m = x * Rat(2).pow(-k);
    while (m < Rat(1)) { m = m * Rat(2); --k; }
    while (m >= Rat(2)) { m = m / Rat(2); ++k; }
    Rat t = (m - Rat(1)) / (m + Rat(1));  // in [0, 1/3)
    unsigned long kb = bits + 6 + static_cast<unsigned long>(k == 0 ? 0 : bitlen(Integer(k)));
    Interval lnm = atanh2_series(t, bits + 4);
    Interval res = lnm + ln2_enclosure(kb) * Interval(Rat(k));
    return round_out(res, bits + 2);
}

namespace detail {

struct CRealNode {
    std::mutex mu;
    bool has_cache = false;
    Interval cache;

    virtual ~CRealNode() = default;
    virtual Interval compute(unsigned long bits) = 0;  // width <= 2^-bits

    Interval enclosure(unsigned long bits) {
        std::lock_guard<std::mutex> lk(mu);
        if (has_cache && cache.width() <= two_pow_neg(bits)) return cache;
        Interval iv = compute(bits);
        if (has_cache) {
            // Both contain the value; keep the intersection.
            iv = Interval(max(iv.lo, cache.lo), min(iv.hi, cache.hi));
        }
        cache = iv;
        has_cache = true;
        return iv;
    }
};

namespace {

using NodePtr = std::shared_ptr<CRealNode>;

struct ConstN final : CRealNode {
    Rat v;
    explicit ConstN(Rat r) : v(std::move(r)) {}
    Interval compute(unsigned long) override { return Interval(v); }
};

struct AlgN final : CRealNode {
    AlgebraicReal a;
    explicit AlgN(AlgebraicReal x) : a(std::move(x)) {}
    Interval compute(unsigned long bits) override { return a.enclosure(bits); }
};

struct NFN final : CRealNode {
    NFElem a;
    explicit NFN(NFElem x) : a(std::move(x)) {}
    Interval compute(unsigned long bits) override { return a.enclosure(bits); }
};

struct HeightN final : CRealNode {
    AlgebraicReal a;
    explicit HeightN(AlgebraicReal x) : a(std::move(x)) {}
    Interval compute(unsigned long bits) override { return a.height_enclosure(bits); }
};

struct NegN final : CRealNode {
    NodePtr c;
    explicit NegN(NodePtr n) : c(std::move(n)) {}
    Interval compute(unsigned long bits) override { return -c->enclosure(bits); }
};

struct AbsN final : CRealNode {
    NodePtr c;
    explicit AbsN(NodePtr n) : c(std::move(n)) {}
    Interval compute(unsigned long bits) override { return abs(c->enclosure(bits)); }
};

struct AddN final : CRealNode {
    NodePtr a, b;
    AddN(NodePtr x, NodePtr y) : a(std::move(x)), b(std::move(y)) {}
    Interval compute(unsigned long bits) override {
        return round_out(a->enclosure(bits + 2) + b->enclosure(bits + 2), bits + 2);
    }
};

struct MaxN final : CRealNode {
    NodePtr a, b;
    bool take_max;
    MaxN(NodePtr x, NodePtr y, bool mx) : a(std::move(x)), b(std::move(y)), take_max(mx) {}
    Interval compute(unsigned long bits) override {
        Interval ia = a->enclosure(bits + 2), ib = b->enclosure(bits + 2);
        return round_out(take_max ? max(ia, ib) : min(ia, ib), bits + 2);
    }
};

struct MulN final : CRealNode {
    NodePtr a, b;
    MulN(NodePtr x, NodePtr y) : a(std::move(x)), b(std::move(y)) {}
    Interval compute(unsigned long bits) override {
        const long cap = precision_cap();
        const Rat target = two_pow_neg(bits);
        for (long wb = static_cast<long>(bits) + 8; wb <= cap; wb *= 2) {
            auto w = static_cast<unsigned long>(wb);
            Interval iv = round_out(a->enclosure(w) * b->enclosure(w), w);
            if (iv.width() <= target) return iv;
        }
        throw undecided_comparison("product enclosure did not reach target width", cap);
    }
};

struct InvN final : CRealNode {
    NodePtr c;
    explicit InvN(NodePtr n) : c(std::move(n)) {}
    Interval compute(unsigned long bits) override {
        const long cap = precision_cap();
        const Rat target = two_pow_neg(bits);
        for (long wb = static_cast<long>(bits) + 8; wb <= cap; wb *= 2) {
            auto w = static_cast<unsigned long>(wb);
            Interval ia = c->enclosure(w);
            if (ia.contains_zero()) {
                if (ia.is_point()) throw std::domain_error("certified division by zero");
                continue;
            }
            Interval iv = round_out(Interval(Rat(1)) / ia, w);
            if (iv.width() <= target) return iv;
        }
        throw undecided_comparison("reciprocal enclosure did not reach target width", cap);
    }
};

struct LnN final : CRealNode {
    NodePtr c;
    explicit LnN(NodePtr n) : c(std::move(n)) {}
    Interval compute(unsigned long bits) override {
        const long cap = precision_cap();
        const Rat target = two_pow_neg(bits);
        for (long wb = static_cast<long>(bits) + 8; wb <= cap; wb *= 2) {
            auto w = static_cast<unsigned long>(wb);
            Interval ia = c->enclosure(w);
            if (ia.hi.sign() < 0 || (ia.is_point() && ia.lo.is_zero()))
                throw std::domain_error("ln of certified nonpositive value");
            if (ia.lo.sign() <= 0) continue;
            Interval iv(ln_rat(ia.lo, w).lo, ln_rat(ia.hi, w).hi);
            if (iv.width() <= target) return iv;
        }
        throw undecided_comparison("log enclosure did not reach target width", cap);
    }
};

struct RootN final : CRealNode {
    NodePtr c;
    unsigned long k;
    RootN(NodePtr n, unsigned long kk) : c(std::move(n)), k(kk) {}
    Interval compute(unsigned long bits) override {
        const long cap = precision_cap();
        const Rat target = two_pow_neg(bits);
        for (long wb = static_cast<long>(bits) + 8; wb <= cap; wb *= 2) {
            auto w = static_cast<unsigned long>(wb);
            Interval ia = c->enclosure(w);
            if (ia.hi.sign() < 0) throw std::domain_error("root of certified negative value");
            // Value is >= 0 by contract; clip rounding slack.
            if (ia.lo.sign() < 0) ia = Interval(Rat(0), ia.hi);
            Interval iv = nth_root(ia, k, w);
            if (iv.width() <= target) return iv;
        }
        throw undecided_comparison("root enclosure did not reach target width", cap);
    }
};

struct PowN final : CRealNode {
    NodePtr c;
    long e;
    PowN(NodePtr n, long ee) : c(std::move(n)), e(ee) {}
    Interval compute(unsigned long bits) override {
        const long cap = precision_cap();
        const Rat target = two_pow_neg(bits);
        for (long wb = static_cast<long>(bits) + 8; wb <= cap; wb *= 2) {
            auto w = static_cast<unsigned long>(wb);
            Interval ia = c->enclosure(w);
            if (e < 0 && ia.contains_zero()) {
                if (ia.is_point()) throw std::domain_error("certified division by zero");
                continue;
            }
            Interval iv = round_out(pow(ia, e), w);
            if (iv.width() <= target) return iv;
        }
        throw undecided_comparison("power enclosure did not reach target width", cap);
    }
};

}  // namespace

}  // namespace detail

using detail::CRealNode;

CReal::CReal() : node_(std::make_shared<detail::ConstN>(Rat(0))) {}
CReal::CReal(const Rat& r) : node_(std::make_shared<detail::ConstN>(r)) {}
CReal::CReal(const AlgebraicReal& a) : node_(std::make_shared<detail::AlgN>(a)) {}
CReal::CReal(const NFElem& a) : node_(std::make_shared<detail::NFN>(a)) {}

CReal CReal::algebraic_height(const AlgebraicReal& a) {
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::HeightN>(a)));
}

CReal CReal::ln(const CReal& x) {
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::LnN>(x.node_)));
}

CReal CReal::ln2() { return ln(CReal(Rat(2))); }

CReal CReal::nth_root(unsigned long k) const {
    if (k == 0) throw invariant_violation("0th root");
    if (k == 1) return *this;
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::RootN>(node_, k)));
}

CReal CReal::pow_int(long e) const {
    if (e == 0) return CReal(Rat(1));
    if (e == 1) return *this;
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::PowN>(node_, e)));
}

CReal operator+(const CReal& a, const CReal& b) {
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::AddN>(a.node_, b.node_)));
}
CReal operator-(const CReal& a) {
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::NegN>(a.node_)));
}
CReal operator-(const CReal& a, const CReal& b) { return a + (-b); }
CReal operator*(const CReal& a, const CReal& b) {
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::MulN>(a.node_, b.node_)));
}
CReal operator/(const CReal& a, const CReal& b) {
    return a * CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::InvN>(b.node_)));
}
CReal abs(const CReal& a) {
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::AbsN>(a.node_)));
}
CReal max(const CReal& a, const CReal& b) {
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::MaxN>(a.node_, b.node_, true)));
}
CReal min(const CReal& a, const CReal& b) {
    return CReal(std::static_pointer_cast<CRealNode>(std::make_shared<detail::MaxN>(a.node_, b.node_, false)));
}

Interval CReal::enclosure(unsigned long bits) const { return node_->enclosure(bits); }

int CReal::compare(const CReal& o) const {
    if (node_ == o.node_) return 0;
    const long cap = precision_cap();
    for (long bits = 32; bits <= cap; bits *= 2) {
        Interval a = enclosure(static_cast<unsigned long>(bits));
        Interval b = o.enclosure(static_cast<unsigned long>(bits));
        if (a.hi < b.lo) return -1;
        if (b.hi < a.lo) return 1;
        if (a.is_point() && b.is_point()) return 0;
    }
    throw undecided_comparison("certified comparison undecided at precision cap", cap);
}

int CReal::sign() const { return compare(CReal()); }

Integer CReal::floor() const {
    const long cap = precision_cap();
    for (long bits = 32; bits <= cap; bits *= 2) {
        Interval iv = enclosure(static_cast<unsigned long>(bits));
        Integer flo = iv.lo.floor(), fhi = iv.hi.floor();
        if (flo == fhi || iv.is_point()) return flo;
    }
    throw undecided_comparison("certified floor undecided at precision cap", cap);
}

Integer CReal::ceil() const {
    const long cap = precision_cap();
    for (long bits = 32; bits <= cap; bits *= 2) {
        Interval iv = enclosure(static_cast<unsigned long>(bits));
        Integer clo = iv.lo.ceil(), chi = iv.hi.ceil();
        if (clo == chi || iv.is_point()) return clo;
    }
    throw undecided_comparison("certified ceil undecided at precision cap", cap);
}

double CReal::to_double_approx() const { return enclosure(64).mid().to_double(); }

std::string CReal::str() const { return enclosure(64).str(); }

std::string decimal_enclosure(const Interval& iv, unsigned digits) {
    Integer scale = pow_int(Integer(10), digits);
    auto fmt = [&](const Integer& scaled) {
        bool neg = scaled < 0;
        Integer a = neg ? Integer(-scaled) : scaled;
        std::string s = a.get_str();
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
        return (neg ? "-" : "") + s;
    };
    Integer lo = (iv.lo * Rat(scale)).floor();
    Integer hi = (iv.hi * Rat(scale)).ceil();
    return "[" + fmt(lo) + ", " + fmt(hi) + "]";
}

}  // namespace subspace_lab
