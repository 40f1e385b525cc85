#include "subspace_lab/rational.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <ostream>

namespace subspace_lab {

namespace {

std::atomic<long>& cap_storage() {
    static std::atomic<long> cap = [] {
        long v = 4096;
        if (const char* env = std::getenv("SUBSPACE_LAB_PRECISION_CAP")) {
            char* end = nullptr;
            long parsed = std::strtol(env, &end, 10);
            if (end && *end == '\0' && parsed > 0) v = parsed;
        }
        return v;
    }();
    return cap;
}

}  // namespace

long precision_cap() { return cap_storage().load(); }

void set_precision_cap(long bits) {
    if (bits <= 0) throw config_error("precision cap must be positive");
    cap_storage().store(bits);
}

Rat Rat::parse(const std::string& s) {
    auto bad = [&] { return config_error("not a rational: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw bad();
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Integer(t));
        Integer num(t.substr(0, slash));
        std::string d = t.substr(slash + 1);
        if (d.empty()) throw bad();
        Integer den(d);
        if (den == 0) throw bad();
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

Integer Rat::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Integer Rat::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw std::domain_error("Rat: 0^negative");
    Integer n = pow_int(num(), k), d = pow_int(den(), k);
    return invert ? Rat(d, n) : Rat(n, d);
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat dyadic_floor(const Rat& x, unsigned long bits) {
    Integer scale = pow_int(Integer(2), bits);
    return Rat((x * Rat(scale)).floor(), scale);
}

Rat dyadic_ceil(const Rat& x, unsigned long bits) {
    Integer scale = pow_int(Integer(2), bits);
    return Rat((x * Rat(scale)).ceil(), scale);
}

Integer pow_int(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Integer iroot_floor(const Integer& n, unsigned long k, bool* exact) {
    if (n < 0) throw std::domain_error("iroot_floor: negative radicand");
    Integer r;
    int ex = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (exact) *exact = ex != 0;
    return r;
}

}  // namespace subspace_lab
