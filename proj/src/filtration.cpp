#include "subspace_lab/filtration.hpp"

#include "subspace_lab/heights.hpp"

#include <algorithm>
#include <optional>

namespace subspace_lab {

namespace {

std::pair<long, unsigned long> frac_parts(const Rat& c) {
    Integer num = c.num(), den = c.den();
    if (mpz_sizeinbase(num.get_mpz_t(), 2) > 24 || mpz_sizeinbase(den.get_mpz_t(), 2) > 24)
        throw config_error("exponent " + c.str() + " too large to clear");
    return {num.get_si(), den.get_ui()};
}

const PlaceBlock& block_at(const FormSystem& sys, const Place& v) {
    for (const auto& pb : sys.places)
        if (pb.v == v) return pb;
    throw config_error("system has no block at place " + v.str());
}

// All index subsets of {0..n-1} of size u, in lexicographic order.
std::vector<std::vector<long>> subsets(long n, long u) {
    std::vector<std::vector<long>> out;
    std::vector<long> c(u);
    for (long j = 0; j < u; ++j) c[j] = j;
    while (true) {
        out.push_back(c);
        long k = u - 1;
        while (k >= 0 && c[k] == n - u + k) --k;
        if (k < 0) break;
        ++c[k];
        for (long j = k + 1; j < u; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

bool subspace_is_rational(const SubspaceF& U) {
    const MatF& b = U.basis_rows();
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j)
            if (!b(i, j).is_rational()) return false;
    return true;
}

Subspace to_rational(const SubspaceF& U) {
    const MatF& b = U.basis_rows();
    MatR r(b.rows(), b.cols());
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) r(i, j) = b(i, j).rational_value();
    return Subspace::from_rows(r);
}

}  // namespace

Rat nu_v(const Subspace& U, const FormSystem& sys, const Place& v) {
    long u = U.dim();
    if (u == 0) return Rat(0);
    const PlaceBlock& pb = block_at(sys, v);
    long n = sys.n;
    if (U.ambient() != n) throw config_error("subspace ambient dimension mismatch");
    // vals(i, j) = L_i(b_j) for the rational basis rows b_j of U.
    std::vector<std::vector<Rat>> basis(u, std::vector<Rat>(n));
    for (long j = 0; j < u; ++j)
        for (long k = 0; k < n; ++k) basis[j][k] = U.basis_rows()(j, k);
    MatF vals(n, u);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < u; ++j) vals(i, j) = pb.forms[i].eval(basis[j]);
    std::optional<Rat> best;
    for (const auto& I : subsets(n, u)) {
        MatF sq(u, u);
        for (long r = 0; r < u; ++r)
            for (long j = 0; j < u; ++j) sq(r, j) = vals(I[r], j);
        if (det(sq).sign() == 0) continue;  // forms dependent on U
        Rat s(0);
        for (long r : I) s += pb.exponents[r];
        if (!best || s < *best) best = s;
    }
    if (!best)
        throw invariant_violation("no independent restriction to the subspace at place " +
                                  v.str());
    return *best;
}

Rat nu(const Subspace& U, const FormSystem& sys) {
    Rat s(0);
    for (const auto& pb : sys.places) s += nu_v(U, sys, pb.v);
    return s;
}

Rat mu(const Subspace& U, const FormSystem& sys) {
    long n = sys.n;
    if (U.dim() >= n) throw config_error("slope is defined for proper subspaces only");
    Rat full = nu(Subspace::full(n), sys);
    return (full - nu(U, sys)) / Rat(n - U.dim());
}

std::vector<SubspaceF> vojta_closure(const std::vector<SubspaceF>& gens, std::size_t cap) {
    std::vector<SubspaceF> fam;
    auto add = [&](const SubspaceF& s) {
        for (const auto& t : fam)
            if (t == s) return false;
        fam.push_back(s);
        if (fam.size() > cap) throw invariant_violation("closure exceeded its size cap");
        return true;
    };
    for (const auto& g : gens) add(g);
    // Worklist over unordered pairs; new members re-enter the queue.
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            add(fam[i].sum(fam[j]));
            add(fam[i].intersect(fam[j]));
        }
    }
    return fam;
}

FiltrationReport exceptional_subspace(const FormSystem& sys) {
    auto viol = validate_system(sys);
    if (!viol.empty()) throw config_error("invalid system: " + viol.front());
    long n = sys.n;

    std::vector<SubspaceF> gens;
    for (const auto& pb : sys.places)
        for (const auto& f : pb.forms) {
            MatF row(1, n);
            for (long j = 0; j < n; ++j) row(0, j) = f.coeffs()[j];
            gens.push_back(SubspaceF::from_rows(kernel_of(row)));
        }
    std::vector<SubspaceF> closure = vojta_closure(gens);

    FiltrationReport rep;
    rep.closure_size = closure.size();
    rep.nu_full = nu(Subspace::full(n), sys);
    rep.mu_zero = rep.nu_full / Rat(n);

    std::vector<Subspace> cands;
    cands.push_back(Subspace::zero(n));
    for (const auto& s : closure) {
        if (s.dim() >= n || !subspace_is_rational(s)) continue;
        Subspace r = to_rational(s);
        bool dup = false;
        for (const auto& c : cands)
            if (c == r) dup = true;
        if (!dup) cands.push_back(r);
    }

    std::optional<Rat> best;
    std::vector<Rat> nus;
    for (const auto& c : cands) {
        Rat m = mu(c, sys);
        nus.push_back(nu(c, sys));
        rep.candidates.emplace_back(c, m);
        if (!best || m < *best) best = m;
    }
    rep.mu0 = *best;
    Subspace u0 = Subspace::full(n);
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (rep.candidates[i].second == rep.mu0) {
            rep.minimizers.push_back(cands[i]);
            u0 = u0.intersect(cands[i]);
        }
    rep.U0 = u0;
    if (mu(rep.U0, sys) != rep.mu0)
        throw invariant_violation("minimizer intersection does not attain the minimum slope");
    rep.semistable = rep.U0.dim() == 0;

    // Compare against the convention that minimizes nu instead of mu.
    Rat nu_min = *std::min_element(nus.begin(), nus.end());
    std::vector<bool> is_mu_min(cands.size()), is_nu_min(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        is_mu_min[i] = rep.candidates[i].second == rep.mu0;
        is_nu_min[i] = nus[i] == nu_min;
    }
    rep.slope_convention_mismatch = is_mu_min != is_nu_min;
    return rep;
}

bool check_u0_height(const Subspace& U0, const FormSystem& sys) {
    long n = sys.n;
    Rat rhs = (Rat(n) * sys.H * sys.H).pow(static_cast<long>(pow_int(Integer(4), n).get_ui()));
    for (long i = 0; i < U0.dim(); ++i) {
        // Primitive integer vector along basis row i.
        std::vector<Rat> row(n);
        Integer den(1);
        for (long j = 0; j < n; ++j) {
            row[j] = U0.basis_rows()(i, j);
            den = lcm(den, row[j].den());
        }
        std::vector<Integer> w(n);
        Integer g(0);
        for (long j = 0; j < n; ++j) {
            w[j] = Integer(row[j].num() * (den / row[j].den()));
            g = gcd(g, w[j]);
        }
        Rat h2(0);
        for (long j = 0; j < n; ++j) {
            Rat c = Rat(w[j], g);
            h2 += c * c;
        }
        if (h2 > rhs) return false;
    }
    return true;
}

CubicLineSolutions cubic_solutions_from_u(const AlgebraicReal& xi, const Rat& delta,
                                          const Rat& alpha, long u_range) {
    if (xi.degree() < 3) throw config_error("construction requires degree >= 3");
    if (delta <= Rat(0) || delta > Rat(1)) throw config_error("delta must lie in (0,1]");
    if (u_range < 0) throw config_error("u_range must be >= 0");
    auto [a, b] = frac_parts(delta);
    auto field = std::make_shared<const NumberField>(xi);
    NFElem gen = NFElem::generator(field);

    Integer r = alpha.num(), s = alpha.den();  // s > 0, gcd(r, s) = 1 canonically
    Rat Ha{std::max(Integer(abs(r)), s)};
    long e3 = 3 * static_cast<long>(b) + a;  // clears exponent 3 + delta
    long e2 = 2 * static_cast<long>(b) + a;

    NFElem dist = abs(gen - NFElem(alpha));
    NFElem fixed = pow(NFElem(Rat(1)) + abs(gen), static_cast<long>(b)) *
                   pow(dist, static_cast<long>(b)) *
                   NFElem(Rat(pow_int(Integer(2), static_cast<unsigned long>(e2))) * Ha.pow(e3));
    auto admits = [&](long u) {
        // |u|^(3+delta) 2^(2+delta) (1+|xi|) |xi-alpha| H^(3+delta) <= 1
        NFElem lhs = NFElem(Rat(Integer(std::abs(u))).pow(e3)) * fixed;
        return (NFElem(Rat(1)) - lhs).sign() >= 0;
    };

    CubicLineSolutions out;
    out.alpha = alpha;
    out.rhs_below_one = !admits(1);
    for (long u = -u_range; u <= u_range; ++u) {
        if (!admits(u)) continue;
        out.admitted_u.push_back(u);
        Integer x1 = Integer(u * r), x2 = Integer(r - u * s), x3 = Integer(-s);
        std::vector<Integer> x = {x1, x2, x3};
        Integer g = gcd(gcd(abs(x1), abs(x2)), abs(x3));
        if (g != 1) throw invariant_violation("constructed triple is not primitive");
        canonical_sign_in_place(x);
        Integer hz = std::max({Integer(abs(x[0])), Integer(abs(x[1])), Integer(abs(x[2]))});
        // |x1 + x2 xi + x3 xi^2| <= H(x)^(-2-delta), cleared of the exponent.
        NFElem val = NFElem(Rat(x[0])) + NFElem(Rat(x[1])) * gen +
                     NFElem(Rat(x[2])) * gen * gen;
        NFElem lhs = pow(abs(val), static_cast<long>(b)) * NFElem(Rat(hz).pow(e2));
        if ((NFElem(Rat(1)) - lhs).sign() >= 0) out.solutions.push_back(x);
    }
    return out;
}

std::function<CReal(const Rat&)> roth_lower_bound_from_count(const AlgebraicReal& xi,
                                                             const Rat& delta,
                                                             const Integer& N) {
    if (delta <= Rat(0) || delta > Rat(1)) throw config_error("delta must lie in (0,1]");
    if (N < 1) throw config_error("solution count must be >= 1");
    auto [a, b] = frac_parts(delta);
    unsigned long e2 = 2 * b + static_cast<unsigned long>(a);
    unsigned long e3 = 3 * b + static_cast<unsigned long>(a);
    // 2^(-2-delta) N^(-3-delta) (1+|xi|)^-1, all certified.
    CReal base = CReal(Rat(Integer(1), Integer(pow_int(Integer(2), e2) * pow_int(N, e3))))
                     .nth_root(b) *
                 (CReal(1) + abs(CReal(xi))).pow_int(-1);
    unsigned long bb = b;
    return [base, e3, bb](const Rat& alpha) {
        Rat H{std::max(Integer(abs(alpha.num())), alpha.den())};
        return base * CReal(Rat(1) / H.pow(static_cast<long>(e3))).nth_root(bb);
    };
}

}  // namespace subspace_lab
