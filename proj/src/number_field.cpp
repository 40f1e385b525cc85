#include "subspace_lab/number_field.hpp"

namespace subspace_lab {

NFElem::NFElem(NumberFieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw invariant_violation("NFElem: null field in field constructor");
    coeffs_.resize(static_cast<std::size_t>(field_->degree()), Rat(0));
    reduce_();
}

NFElem NFElem::generator(const NumberFieldPtr& field) {
    if (field->degree() == 1) return NFElem(field->generator().rational_value());
    std::vector<Rat> c(static_cast<std::size_t>(field->degree()), Rat(0));
    c[1] = Rat(1);
    return NFElem(field, std::move(c));
}

void NFElem::reduce_() {
    if (!field_) return;
    long d = field_->degree();
    if (static_cast<long>(coeffs_.size()) > d) {
        auto [q, r] = Poly::divmod(Poly(coeffs_), field_->generator().minpoly());
        (void)q;
        coeffs_.assign(static_cast<std::size_t>(d), Rat(0));
        for (long i = 0; i <= r.degree(); ++i) coeffs_[static_cast<std::size_t>(i)] = r.coeff(i);
    }
}

bool NFElem::is_zero() const {
    for (const Rat& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rat NFElem::rational_value() const {
    if (!is_rational()) throw invariant_violation("NFElem: not rational");
    return coeffs_[0];
}

void NFElem::coerce(NFElem& a, const NFElem& b) {
    if (a.field_ == b.field_) return;
    if (!a.field_ && b.field_) {
        Rat r = a.coeffs_[0];
        a.field_ = b.field_;
        a.coeffs_.assign(static_cast<std::size_t>(b.field_->degree()), Rat(0));
        a.coeffs_[0] = r;
        return;
    }
    if (a.field_ && !b.field_) return;  // b coerced on the fly by callers
    throw invariant_violation("NFElem: arithmetic across distinct fields");
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

NFElem& NFElem::operator+=(const NFElem& o) {
    NFElem rhs = o;
    coerce(*this, rhs);
    coerce(rhs, *this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) { return *this += -o; }

NFElem& NFElem::operator*=(const NFElem& o) {
    NFElem rhs = o;
    coerce(*this, rhs);
    coerce(rhs, *this);
    if (!field_) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    Poly prod = Poly(coeffs_) * Poly(rhs.coeffs_);
    auto [q, r] = Poly::divmod(prod, field_->generator().minpoly());
    (void)q;
    coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rat(0));
    for (long i = 0; i <= r.degree(); ++i) coeffs_[static_cast<std::size_t>(i)] = r.coeff(i);
    return *this;
}

NFElem NFElem::inv() const {
    if (is_zero()) throw std::domain_error("NFElem: inverse of zero");
    if (!field_ || is_rational()) {
        NFElem r = *this;
        for (Rat& c : r.coeffs_) c = Rat(0);
        r.coeffs_[0] = coeffs_[0].inv();
        return r;
    }
    // Extended Euclid in Q[x]: s*a + t*minpoly = gcd = const (irreducible).
    Poly a = Poly(coeffs_), m = field_->generator().minpoly();
    Poly r0 = m, r1 = a;
    Poly s0 = Poly{}, s1 = Poly::constant(Rat(1));  // coefficients of a
    while (!r1.is_zero()) {
        auto [q, r2] = Poly::divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0.degree() != 0)
        throw invariant_violation("NFElem: non-invertible element, minimal polynomial reducible");
    Poly invpoly = s0 * (Rat(1) / r0.coeff(0));
    auto [q, rem] = Poly::divmod(invpoly, m);
    (void)q;
    std::vector<Rat> c(static_cast<std::size_t>(field_->degree()), Rat(0));
    for (long i = 0; i <= rem.degree(); ++i) c[static_cast<std::size_t>(i)] = rem.coeff(i);
    return NFElem(field_, std::move(c));
}

NFElem& NFElem::operator/=(const NFElem& o) { return *this *= o.inv(); }

int NFElem::sign() const {
    if (!field_) return coeffs_[0].sign();
    return field_->generator().sign_of_poly(Poly(coeffs_));
}

Interval NFElem::enclosure(unsigned long bits) const {
    if (!field_ || is_rational()) return Interval(coeffs_[0]);
    Poly p(coeffs_);
    const long cap = precision_cap();
    Rat target = Rat(Integer(1), pow_int(Integer(2), bits + 1));
    for (long wb = static_cast<long>(bits) + 8; wb <= cap; wb *= 2) {
        Interval iv = p.eval(field_->generator().enclosure(static_cast<unsigned long>(wb)));
        if (iv.width() <= target) return round_out(iv, bits + 3);
    }
    throw undecided_comparison("NFElem enclosure did not converge", cap);
}

std::string NFElem::str() const {
    if (!field_ || is_rational()) return coeffs_[0].str();
    return Poly(coeffs_).str();
}

Poly min_poly_of(const NFElem& a) {
    if (a.is_rational()) {
        Rat r = a.rational_value();
        return Poly({-r, Rat(1)}).integer_normalized();
    }
    const auto& F = a.field();
    const long d = F->degree();
    // Multiplication-by-a matrix on the power basis.
    std::vector<std::vector<Rat>> M(static_cast<std::size_t>(d),
                                    std::vector<Rat>(static_cast<std::size_t>(d), Rat(0)));
    NFElem xi = NFElem::generator(F);
    NFElem col = a;
    for (long j = 0; j < d; ++j) {
        for (long i = 0; i < d; ++i)
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                col.coeffs()[static_cast<std::size_t>(i)];
        col *= xi;
    }
    // Faddeev-LeVerrier: char(x) = x^d + c_1 x^{d-1} + ... + c_d.
    auto mat_mul = [&](const std::vector<std::vector<Rat>>& A, const std::vector<std::vector<Rat>>& B) {
        std::vector<std::vector<Rat>> C(A.size(), std::vector<Rat>(A.size(), Rat(0)));
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t k = 0; k < A.size(); ++k) {
                if (A[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < A.size(); ++j) C[i][j] += A[i][k] * B[k][j];
            }
        return C;
    };
    auto trace = [&](const std::vector<std::vector<Rat>>& A) {
        Rat t(0);
        for (std::size_t i = 0; i < A.size(); ++i) t += A[i][i];
        return t;
    };
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
    c[static_cast<std::size_t>(d)] = Rat(1);  // leading coefficient of x^d
    std::vector<std::vector<Rat>> Ak = M;
    for (long k = 1; k <= d; ++k) {
        Rat ck = -trace(Ak) / Rat(k);
        c[static_cast<std::size_t>(d - k)] = ck;
        if (k < d) {
            for (long i = 0; i < d; ++i) Ak[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += ck;
            Ak = mat_mul(M, Ak);
        }
    }
    return squarefree_part(Poly(c)).integer_normalized();
}

NFElem abs(const NFElem& a) { return a.abs(); }
NFElem min(const NFElem& a, const NFElem& b) { return b < a ? b : a; }
NFElem max(const NFElem& a, const NFElem& b) { return a < b ? b : a; }

NFElem pow(const NFElem& a, long e) {
    if (e == 0) return NFElem(Rat(1));
    NFElem base = e < 0 ? a.inv() : a;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    NFElem acc(Rat(1));
    while (k) {
        if (k & 1ul) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

}  // namespace subspace_lab
