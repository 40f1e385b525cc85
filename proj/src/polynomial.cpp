#include "subspace_lab/polynomial.hpp"

#include <sstream>

namespace subspace_lab {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Interval Poly::eval(const Interval& x) const {
    Interval acc{Rat(0)};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Interval(c_[i]);
    return acc;
}

Box Poly::eval(const Box& x) const {
    Box acc{Interval(Rat(0)), Interval(Rat(0))};
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + Box(Interval(c_[i]), Interval(Rat(0)));
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    std::vector<Rat> rem = a.c_;
    long db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
    Rat inv_lead = b.lead().inv();
    for (long i = a.degree(); i >= db; --i) {
        Rat q = rem[i] * inv_lead;
        if (q.is_zero()) continue;
        quo[i - db] = q;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

bool Poly::has_integer_coeffs() const {
    for (const auto& a : c_)
        if (!a.is_integer()) return false;
    return true;
}

Poly Poly::integer_normalized() const {
    if (is_zero()) return *this;
    Integer l(1);
    for (const auto& a : c_) {
        Integer d = a.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> zc(c_.size());
    Integer content(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat scaled = c_[i] * Rat(l);
        zc[i] = scaled.num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zc[i].get_mpz_t());
    }
    if (zc.back() < 0) content = -content;
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = Rat(Integer(zc[i] / content));
    return Poly(std::move(r));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (os.tellp() > 0) os << (c_[i].sign() > 0 ? " + " : " - ");
        else if (c_[i].sign() < 0) os << "-";
        Rat a = c_[i].abs();
        if (i == 0 || a != Rat(1)) os << a.str();
        if (i >= 1) {
            if (a != Rat(1)) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = Poly::divmod(f, g).second;
        f = g;
        g = r;
    }
    return f.monic();
}

Poly squarefree_part(const Poly& a) {
    if (a.degree() <= 1) return a.monic();
    Poly g = gcd(a, a.derivative());
    if (g.degree() == 0) return a.monic();
    return Poly::divmod(a, g).first.monic();
}

std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

long sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long sign_variations_at_inf(const std::vector<Poly>& chain, int dir) {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = p.lead().sign();
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

long sturm_count(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    if (chain.empty()) return 0;
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

long sturm_count_all(const std::vector<Poly>& chain) {
    if (chain.empty()) return 0;
    return sign_variations_at_inf(chain, -1) - sign_variations_at_inf(chain, +1);
}

Rat cauchy_root_bound(const Poly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat m(0);
    Rat lead = p.lead().abs();
    for (long i = 0; i < p.degree(); ++i) m = max(m, p.coeff(i).abs() / lead);
    return Rat(1) + m;
}

}  // namespace subspace_lab
