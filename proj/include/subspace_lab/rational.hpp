#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <iosfwd>

namespace subspace_lab {

using Integer = mpz_class;

// Thrown when a certified comparison could not be decided within the
// precision cap.  Carries the cap that was in force.
class undecided_comparison : public std::runtime_error {
public:
    explicit undecided_comparison(const std::string& what, long cap_bits)
        : std::runtime_error(what), cap_bits_(cap_bits) {}
    long cap_bits() const { return cap_bits_; }

private:
    long cap_bits_;
};

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invariant_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact rational. Thin value wrapper over mpq_class: all operators return
// plain Rat (gmpxx expression templates stay contained), canonical form is
// maintained by GMP (coprime, positive denominator, 0 == 0/1).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(const Integer& n) : v_(n) {}
    Rat(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) {}

    // Accepts "n", "-n", "n/d"; no decimals (exactness).
    static Rat parse(const std::string& s);

    const mpq_class& mpq() const { return v_; }
    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    Integer floor() const;
    Integer ceil() const;

    // x^e for any integer e (e<0 requires x != 0).
    Rat pow(long e) const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat abs(const Rat& a) { return a.abs(); }

// Largest dyadic k/2^bits <= x, and smallest >= x. Used to keep certified
// interval endpoints from growing without bound.
Rat dyadic_floor(const Rat& x, unsigned long bits);
Rat dyadic_ceil(const Rat& x, unsigned long bits);

Integer pow_int(const Integer& b, unsigned long e);

// floor(root_k(n)) for n >= 0, k >= 1; exact flag reports n == r^k.
Integer iroot_floor(const Integer& n, unsigned long k, bool* exact = nullptr);

// Global bit budget for certified refinement loops. Initialized once from
// SUBSPACE_LAB_PRECISION_CAP (default 4096); adjustable programmatically.
long precision_cap();
void set_precision_cap(long bits);

}  // namespace subspace_lab
