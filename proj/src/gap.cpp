#include "subspace_lab/gap.hpp"

#include "subspace_lab/creal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace subspace_lab {

namespace {

// c = a/b with b > 0, both fitting comfortably in machine words.
std::pair<long, unsigned long> frac_parts(const Rat& c) {
    Integer num = c.num(), den = c.den();
    if (mpz_sizeinbase(num.get_mpz_t(), 2) > 24 || mpz_sizeinbase(den.get_mpz_t(), 2) > 24)
        throw config_error("exponent " + c.str() + " too large to clear");
    return {num.get_si(), den.get_ui()};
}

ComplexRat cdiv(const ComplexRat& a, const ComplexRat& b) {
    Rat d = b.mag_sq();
    return ComplexRat{(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

ComplexRat cmul(const ComplexRat& a, const ComplexRat& b) {
    return ComplexRat{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexRat csub(const ComplexRat& a, const ComplexRat& b) {
    return ComplexRat{a.re - b.re, a.im - b.im};
}

// Index of the half-open grid cell of [-1,1] containing t: floor((t+1)g/2),
// with t = 1 folded into the last cell.
long axis_index(const Rat& t, long g) {
    Rat val = (t + Rat(1)) * Rat(g) / Rat(2);
    Integer k = val.floor();
    if (k < 0) return 0;
    if (k >= g) return g - 1;
    return k.get_si();
}

ComplexRat cdet(std::vector<std::vector<ComplexRat>> m) {
    // Gaussian elimination over Q(i); sizes here are tiny.
    long n = static_cast<long>(m.size());
    ComplexRat d{Rat(1), Rat(0)};
    for (long c = 0; c < n; ++c) {
        long p = -1;
        for (long r = c; r < n; ++r)
            if (!m[r][c].re.is_zero() || !m[r][c].im.is_zero()) { p = r; break; }
        if (p < 0) return ComplexRat{Rat(0), Rat(0)};
        if (p != c) {
            std::swap(m[p], m[c]);
            d.re = -d.re;
            d.im = -d.im;
        }
        d = cmul(d, m[c][c]);
        for (long r = c + 1; r < n; ++r) {
            if (m[r][c].re.is_zero() && m[r][c].im.is_zero()) continue;
            ComplexRat f = cdiv(m[r][c], m[c][c]);
            for (long j = c; j < n; ++j) m[r][j] = csub(m[r][j], cmul(f, m[c][j]));
        }
    }
    return d;
}

// M for the clustering partition: (9/2)^(n/2), rounded up to a rational
// when n is odd.
Rat clustering_M(long n) {
    if (n % 2 == 0) return Rat(9, 2).pow(n / 2);
    return nth_root(Interval(Rat(9, 2).pow(n)), 2, 64).hi;
}

// Value Q^e * w with Q > 0 rational and w in the system's field. Comparisons
// clear the fractional exponent exactly: both sides are raised to the
// denominator of the exponent difference, which preserves order on reals of
// equal sign.
struct ScaledVal {
    Rat e;
    NFElem w;
};

int sign_minus_rat(const Rat& Q, const ScaledVal& a, const Rat& r) {
    int sw = a.w.sign();
    if (sw == 0) return -r.sign();
    int sr = r.sign();
    if (sr == 0) return sw;
    if (sw != sr) return sw;
    auto [p, q] = frac_parts(a.e);
    NFElem lhs = pow(abs(a.w), static_cast<long>(q)) * NFElem(Q.pow(p));
    NFElem rhs = NFElem(abs(r).pow(static_cast<long>(q)));
    return (lhs - rhs).sign() * sw;
}

int sign_abs_minus_abs(const Rat& Q, const ScaledVal& a, const ScaledVal& b) {
    if (a.w.sign() == 0) return b.w.sign() == 0 ? 0 : -1;
    if (b.w.sign() == 0) return 1;
    auto [p, q] = frac_parts(a.e - b.e);
    NFElem lhs = pow(abs(a.w), static_cast<long>(q)) * NFElem(Q.pow(p));
    NFElem rhs = pow(abs(b.w), static_cast<long>(q));
    return (lhs - rhs).sign();
}

// Cell index for a real scaled value t in [-1,1]: largest k with
// t >= -1 + 2k/g, capped at g-1. Matches axis_index on rationals.
long axis_index_scaled(const Rat& Q, const ScaledVal& t, long g) {
    long k = 0;
    while (k + 1 < g && sign_minus_rat(Q, t, Rat(-1) + Rat(2 * (k + 1)) / Rat(g)) >= 0) ++k;
    return k;
}

}  // namespace

bool PartitionClass::operator<(const PartitionClass& o) const {
    if (n != o.n) return n < o.n;
    if (M != o.M) return M < o.M;
    if (max_index != o.max_index) return max_index < o.max_index;
    return cube < o.cube;
}

bool PartitionClass::operator==(const PartitionClass& o) const {
    return n == o.n && M == o.M && max_index == o.max_index && cube == o.cube;
}

std::string PartitionClass::str() const {
    std::ostringstream os;
    os << "(" << max_index << ", [";
    for (std::size_t j = 0; j < cube.size(); ++j) {
        if (j) os << ",";
        os << cube[j];
    }
    os << "])";
    return os.str();
}

long partition_axis_count(long n, const Rat& M) {
    if (n < 2) throw config_error("partition requires n >= 2");
    if (M < Rat(1)) throw config_error("partition requires M >= 1");
    Rat m2nn = M * M * Rat(pow_int(Integer(n), static_cast<unsigned long>(n)));
    // Khat >= K = (M n^(n/2))^(1/(n-1)), within 2^-64.
    Rat khat = nth_root(Interval(m2nn), static_cast<unsigned long>(2 * (n - 1)), 64).hi;
    // floor(sqrt(8) * p/q) = floor(isqrt(8 p^2) / q); cells of side 2/g then
    // have side <= 1/(sqrt(2) Khat) <= 1/(sqrt(2) K).
    Integer p = khat.num(), q = khat.den();
    Integer s = iroot_floor(Integer(8 * p * p), 2);
    Integer g = s / q + 1;
    if (mpz_sizeinbase(g.get_mpz_t(), 2) > 24)
        throw config_error("partition grid too fine: M = " + M.str());
    return g.get_si();
}

PartitionClass partition_assign(const std::vector<ComplexRat>& y, const Rat& M) {
    long n = static_cast<long>(y.size());
    if (n < 2) throw config_error("partition_assign requires n >= 2 coordinates");
    long g = partition_axis_count(n, M);
    PartitionClass pc;
    pc.n = n;
    pc.M = M;
    long i = 0;
    Rat best = y[0].mag_sq();
    for (long j = 1; j < n; ++j) {
        Rat m = y[j].mag_sq();
        if (m > best) {
            best = m;
            i = j;
        }
    }
    pc.max_index = i + 1;
    if (best.is_zero()) {
        pc.cube.assign(2 * (n - 1), axis_index(Rat(0), g));
        return pc;
    }
    for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        ComplexRat z = cdiv(y[j], y[i]);
        pc.cube.push_back(axis_index(z.re, g));
        pc.cube.push_back(axis_index(z.im, g));
    }
    return pc;
}

bool verify_class_determinant(const std::vector<std::vector<ComplexRat>>& samples, const Rat& M) {
    if (samples.empty()) throw config_error("no sample vectors");
    std::size_t n = samples[0].size();
    if (samples.size() != n)
        throw config_error("determinant check needs exactly n vectors of C^n");
    PartitionClass cls = partition_assign(samples[0], M);
    for (const auto& y : samples) {
        if (y.size() != n) throw config_error("sample vectors differ in length");
        if (!(partition_assign(y, M) == cls))
            throw config_error("sample vectors do not share a partition class");
    }
    ComplexRat d = cdet(samples);
    Rat det_sq = d.mag_sq();
    // |det|^2 M^2 <= prod_k max_j |y_kj|^2, all exact.
    Rat prod(1);
    for (const auto& y : samples) {
        Rat m(0);
        for (const auto& c : y) m = std::max(m, c.mag_sq());
        prod *= m;
    }
    return det_sq * M * M <= prod;
}

ClassCountBound class_count_bound(long n, const Rat& M, long d) {
    if (n < 2 || d < 1) throw config_error("class_count_bound requires n >= 2, d >= 1");
    ClassCountBound b;
    b.partition_bound = Rat(pow_int(Integer(20 * n), static_cast<unsigned long>(n))) * M * M;
    b.clustering_bound = Rat(pow_int(Integer(90 * n), static_cast<unsigned long>(n * d)));
    b.rational_case_bound = Rat(pow_int(Integer(200), static_cast<unsigned long>(n)));
    long g = partition_axis_count(n, M);
    b.actual_grid_count =
        Integer(n) * pow_int(Integer(g), static_cast<unsigned long>(2 * n - 2));
    return b;
}

Subspace window_subspace(const FormSystem& sys, const std::vector<SolutionRecord>& solutions,
                         const Rat& Q) {
    long n = sys.n;
    auto [a, b] = frac_parts(sys.delta);
    unsigned long nb2 = static_cast<unsigned long>(2 * n) * b;
    if (Q < Rat(1) || Q.pow(a) < Rat(pow_int(Integer(n), nb2)))
        throw config_error("window base Q below n^(2n/delta)");
    // Members: Q <= H(x) < Q^(1 + delta/2n), cleared to H^(2nb) < Q^(2nb+a).
    std::vector<const SolutionRecord*> members;
    Rat rhs = Q.pow(static_cast<long>(nb2) + a);
    for (const auto& s : solutions)
        if (s.height >= Q && s.height.pow(static_cast<long>(nb2)) < rhs)
            members.push_back(&s);
    if (members.empty()) return Subspace::zero(n);
    MatR rows(static_cast<long>(members.size()), n);
    for (std::size_t r = 0; r < members.size(); ++r)
        for (long j = 0; j < n; ++j) rows(static_cast<long>(r), j) = Rat(members[r]->x[j]);
    Subspace span = Subspace::from_rows(rows);
    if (span.is_full())
        throw invariant_violation("window at Q = " + Q.str() + " spans the whole space");
    // Independent certificate: sampled n-tuples of members are degenerate.
    long m = static_cast<long>(members.size());
    for (long t = 0; t + n <= m && t < 50; ++t) {
        MatR tup(n, n);
        for (long r = 0; r < n; ++r)
            for (long j = 0; j < n; ++j) tup(r, j) = Rat(members[t + r]->x[j]);
        if (!det(tup).is_zero())
            throw invariant_violation("window tuple with nonzero determinant at Q = " + Q.str());
    }
    return span;
}

std::map<PartitionClass, Subspace> small_solution_classes(
    const FormSystem& sys, const std::vector<SolutionRecord>& solutions, const Rat& Q) {
    long n = sys.n;
    auto [a, b] = frac_parts(sys.delta);
    unsigned long nb2 = static_cast<unsigned long>(2 * n) * b;
    if (Q < Rat(1)) throw config_error("window base Q must be >= 1");
    Rat M = clustering_M(n);
    long g = partition_axis_count(n, M);
    const PlaceBlock& inf = sys.infinite_block();
    // Members: Q <= H(x) < 2 Q^(1 + delta/2n).
    Rat rhs = Rat(pow_int(Integer(2), nb2)) * Q.pow(static_cast<long>(nb2) + a);
    std::map<PartitionClass, std::vector<const SolutionRecord*>> groups;
    for (const auto& s : solutions) {
        if (!(s.height >= Q && s.height.pow(static_cast<long>(nb2)) < rhs)) continue;
        // y_i = Q^(-c_i) L_i(x): real scaled values at the infinite place.
        std::vector<ScaledVal> y(n);
        for (long i = 0; i < n; ++i)
            y[i] = ScaledVal{-inf.exponents[i], inf.forms[i].eval(s.x)};
        long imax = 0;
        for (long j = 1; j < n; ++j)
            if (sign_abs_minus_abs(Q, y[j], y[imax]) > 0) imax = j;
        PartitionClass pc;
        pc.n = n;
        pc.M = M;
        pc.max_index = imax + 1;
        if (y[imax].w.sign() == 0) {
            pc.cube.assign(2 * (n - 1), axis_index(Rat(0), g));
        } else {
            for (long j = 0; j < n; ++j) {
                if (j == imax) continue;
                ScaledVal z{y[j].e - y[imax].e, y[j].w / y[imax].w};
                pc.cube.push_back(axis_index_scaled(Q, z, g));
                pc.cube.push_back(axis_index(Rat(0), g));  // values are real
            }
        }
        groups[pc].push_back(&s);
    }
    std::map<PartitionClass, Subspace> out;
    for (const auto& [pc, mem] : groups) {
        MatR rows(static_cast<long>(mem.size()), n);
        for (std::size_t r = 0; r < mem.size(); ++r)
            for (long j = 0; j < n; ++j) rows(static_cast<long>(r), j) = Rat(mem[r]->x[j]);
        Subspace span = Subspace::from_rows(rows);
        if (span.is_full())
            throw invariant_violation("class " + pc.str() + " spans the whole space");
        out.emplace(pc, span);
    }
    return out;
}

SubspaceCover subspace_cover(const std::vector<std::vector<Rat>>& points,
                             const std::map<Place, Rat>& D_v) {
    if (points.empty()) throw config_error("subspace_cover: no points");
    long n = static_cast<long>(points[0].size());
    if (n < 2) throw config_error("subspace_cover requires ambient dimension >= 2");
    for (const auto& p : points)
        if (static_cast<long>(p.size()) != n) throw config_error("points differ in length");
    for (const auto& [v, dv] : D_v)
        if (dv <= Rat(0)) throw config_error("D_v must be positive");
    long m = static_cast<long>(points.size());
    if (m < n) throw config_error("subspace_cover needs at least n points");

    auto bound_at = [&](const Place& v) {
        auto it = D_v.find(v);
        return it == D_v.end() ? Rat(1) : it->second;
    };

    MatR all(m, n);
    for (long r = 0; r < m; ++r)
        for (long j = 0; j < n; ++j) all(r, j) = points[r][j];

    // All n-tuple determinants, checked against D_v at every relevant place.
    std::vector<std::vector<long>> combos;
    {
        std::vector<long> c(n);
        for (long j = 0; j < n; ++j) c[j] = j;
        while (true) {
            combos.push_back(c);
            long k = n - 1;
            while (k >= 0 && c[k] == m - n + k) --k;
            if (k < 0) break;
            ++c[k];
            for (long j = k + 1; j < n; ++j) c[j] = c[j - 1] + 1;
        }
    }
    std::vector<Rat> dets(combos.size());
    for (std::size_t t = 0; t < combos.size(); ++t) {
        MatR tup(n, n);
        for (long r = 0; r < n; ++r)
            for (long j = 0; j < n; ++j) tup(r, j) = points[combos[t][r]][j];
        dets[t] = det(tup);
    }
    for (std::size_t t = 0; t < combos.size(); ++t) {
        const Rat& d = dets[t];
        if (d.is_zero()) continue;
        if (abs(d) > bound_at(Place::inf()))
            throw config_error("tuple determinant exceeds D at the infinite place");
        std::set<Integer> primes;
        for (const auto& [v, dv] : D_v)
            if (!v.infinite) primes.insert(v.p);
        for (const auto& [p, e] : factor(d.den())) primes.insert(p);
        for (const Integer& p : primes)
            if (abs_value(d, Place::finite(p)) > bound_at(Place::finite(p)))
                throw config_error("tuple determinant exceeds D at p = " + p.get_str());
    }

    SubspaceCover res;
    Rat D(1);
    for (const auto& [v, dv] : D_v) D *= dv;
    res.bound = Rat(pow_int(Integer(100), static_cast<unsigned long>(n))) *
                nth_root(Interval(D), static_cast<unsigned long>(n - 1), 64).hi;

    if (rank_of(MatR(all)) < n) {
        // Degenerate input: one proper subspace suffices.
        res.cover.push_back(Subspace::from_rows(all));
        res.lattice = Lattice::standard(n);
        res.bound_holds = Rat(1) <=
            Rat(pow_int(Integer(100), static_cast<unsigned long>(n * (n - 1)))) * D;
        return res;
    }

    // The intersection of the per-place local modules generated by
    // |det|_v-maximizing tuples equals the span of all points: both lattices
    // contain the span, and the covolume valuations match place by place.
    Lattice A = Lattice::from_rows(all);
    Rat covA = A.covolume();
    std::set<Integer> check_primes;
    for (const auto& [v, dv] : D_v)
        if (!v.infinite) check_primes.insert(v.p);
    for (const auto& [p, e] : factor(covA.num())) check_primes.insert(p);
    for (const auto& [p, e] : factor(covA.den())) check_primes.insert(p);
    for (const Integer& p : check_primes) {
        long best_ord = 0;
        bool have = false;
        std::size_t best_t = 0;
        for (std::size_t t = 0; t < combos.size(); ++t) {
            if (dets[t].is_zero()) continue;
            long o = ord_p(dets[t], p);
            if (!have || o < best_ord) {
                have = true;
                best_ord = o;
                best_t = t;
            }
        }
        MatR tup(n, n);
        for (long r = 0; r < n; ++r)
            for (long j = 0; j < n; ++j) tup(r, j) = points[combos[best_t][r]][j];
        Lattice local = Lattice::from_rows(tup);
        if (ord_p(local.covolume(), p) != ord_p(covA, p))
            throw invariant_violation("local module at p = " + p.get_str() +
                                      " disagrees with the point span");
    }
    res.lattice = A;

    // Pull the points back to integer coordinates.
    MatR binv = inverse(MatR(A.basis()));
    std::vector<VecR> pulled_rows;
    for (long r = 0; r < m; ++r) {
        VecR u = (all.row(r) * binv).transpose();
        std::vector<Integer> ui(n);
        for (long j = 0; j < n; ++j) {
            if (!u(j).is_integer())
                throw invariant_violation("point outside the computed lattice");
            ui[j] = u(j).num();
        }
        res.pulled.push_back(std::move(ui));
        pulled_rows.push_back(u);
    }

    // Greedy cover by proper spans of the pulled points.
    std::vector<VecR> remaining;
    for (const auto& u : pulled_rows) {
        bool zero = true;
        for (long j = 0; j < n; ++j)
            if (!u(j).is_zero()) zero = false;
        if (zero) continue;
        bool dup = false;
        for (const auto& w : remaining)
            if (mats_equal(MatR(w.transpose()), MatR(u.transpose()))) dup = true;
        if (!dup) remaining.push_back(u);
    }
    std::vector<Subspace> cover_u;
    while (!remaining.empty()) {
        MatR seed(1, n);
        seed.row(0) = remaining[0].transpose();
        Subspace s = Subspace::from_rows(seed);
        for (const auto& q : remaining) {
            if (s.contains(q)) continue;
            MatR ext(s.dim() + 1, n);
            ext.topRows(s.dim()) = s.basis_rows();
            ext.row(s.dim()) = q.transpose();
            Subspace t = Subspace::from_rows(ext);
            if (t.dim() < n) s = t;
        }
        std::vector<VecR> rest;
        for (const auto& q : remaining)
            if (!s.contains(q)) rest.push_back(q);
        remaining = std::move(rest);
        cover_u.push_back(s);
    }
    if (cover_u.empty()) cover_u.push_back(Subspace::zero(n));

    // Map the covers back to the original coordinates (x = u * basis).
    for (const auto& s : cover_u) {
        MatR rows = s.basis_rows() * A.basis();
        res.cover.push_back(Subspace::from_rows(rows));
    }
    for (long r = 0; r < m; ++r) {
        VecR x = all.row(r).transpose();
        bool hit = false;
        for (const auto& s : res.cover)
            if (s.contains(x)) hit = true;
        bool zero = true;
        for (long j = 0; j < n; ++j)
            if (!x(j).is_zero()) zero = false;
        if (!hit && !zero) throw invariant_violation("cover misses a point");
    }

    // |cover| <= 100^n D^(1/(n-1)), cleared of the root exactly.
    res.bound_holds =
        Rat(pow_int(Integer(static_cast<long>(res.cover.size())),
                    static_cast<unsigned long>(n - 1))) <=
        Rat(pow_int(Integer(100), static_cast<unsigned long>(n * (n - 1)))) * D;
    return res;
}

CoveringReport covering_intervals(long n, const Rat& delta, const Rat& H) {
    if (n < 2) throw config_error("covering requires n >= 2");
    if (delta <= Rat(0) || delta > Rat(1)) throw config_error("delta must lie in (0,1]");
    if (H < Rat(1)) throw config_error("H must be >= 1");
    auto [a, b] = frac_parts(delta);
    unsigned long nb2 = static_cast<unsigned long>(2 * n) * b;
    Rat e0 = Rat(Integer(nb2), Integer(a));                      // 2n/delta
    Rat rho = Rat(Integer(Integer(nb2) + a), Integer(nb2));      // 1 + delta/2n

    CoveringReport rep;
    CReal lnrho = CReal::ln(CReal(rho));

    // I1 = [n^e0, max(2H, n^e0)), windows [n^(e h), n^(e h * rho)).
    Rat H2 = Rat(2) * H;
    bool i1_empty = H2.pow(a) <= Rat(pow_int(Integer(n), nb2));
    if (i1_empty) {
        rep.A = 1;
        rep.covered_i1 = true;
        rep.i1_exponents.emplace_back(e0, e0 * rho);
    } else {
        auto r = log_ratio_exact(H2, Rat(n));  // 2H = n^r if multiplicatively dependent
        if (r) {
            Rat ratio = *r / e0;  // > 1 here
            if (auto x = log_ratio_exact(ratio, rho)) {
                rep.A = 1 + x->floor();
            } else {
                CReal X = CReal::ln(CReal(ratio)) / lnrho;
                rep.A = 1 + X.floor();
            }
        } else {
            CReal inner = CReal::ln(CReal(H2)) / CReal::ln(CReal(Rat(n))) / CReal(e0);
            CReal X = CReal::ln(inner) / lnrho;
            rep.A = 1 + X.floor();
        }
        Rat e = e0;
        for (Integer h = 0; h < rep.A; ++h) {
            rep.i1_exponents.emplace_back(e, e * rho);
            e *= rho;
        }
        if (r)
            rep.covered_i1 = e >= *r;
        else
            rep.covered_i1 =
                CReal::ln(CReal(Rat(n))) * CReal(e) >= CReal::ln(CReal(H2));
    }

    // I2 = [1, n^e0), windows [2^gamma_h, 2 * 2^(gamma_h rho)); the upper
    // exponent gamma_h rho + 1 is exactly the next window's lower one.
    bool have_j = false;
    long j2 = 0;
    {
        Integer nn(n);
        while (nn % 2 == 0) {
            nn /= 2;
            ++j2;
        }
        have_j = (nn == 1);  // n = 2^j2
    }
    {
        if (have_j) {
            Rat inner = Rat(1 + j2);  // 1 + log2 n
            if (auto x = log_ratio_exact(inner, rho)) {
                rep.B = 1 + x->floor();
            } else {
                CReal X = CReal::ln(CReal(inner)) / lnrho;
                rep.B = 1 + X.floor();
            }
        } else {
            CReal inner = CReal(Rat(1)) + CReal::ln(CReal(Rat(n))) / CReal::ln2();
            CReal X = CReal::ln(inner) / lnrho;
            rep.B = 1 + X.floor();
        }
        Rat gamma(0);
        for (Integer h = 0; h < rep.B; ++h) {
            Rat up = gamma * rho + Rat(1);
            rep.i2_exponents.emplace_back(gamma, up);
            gamma = up;
        }
        if (have_j)
            rep.covered_i2 = gamma >= e0 * Rat(j2);
        else
            rep.covered_i2 = CReal(gamma) * CReal::ln2() >=
                             CReal(e0) * CReal::ln(CReal(Rat(n)));
    }

    rep.a_bound = CReal(Rat(4 * n) / delta) *
                  CReal::ln(CReal::ln(CReal(Rat(4) * H)));
    rep.b_bound = CReal(Rat(4 * n) / delta) *
                  CReal::ln(CReal(3) * CReal::ln(CReal(Rat(n))));
    return rep;
}

std::optional<std::size_t> find_window(const std::vector<std::pair<Rat, Rat>>& exps, long base,
                                       const Rat& x) {
    if (x <= Rat(0)) throw config_error("find_window requires x > 0");
    if (base < 2) throw config_error("find_window requires base >= 2");
    if (auto r = log_ratio_exact(x, Rat(base))) {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (*r >= exps[i].first && *r < exps[i].second) return i;
        return std::nullopt;
    }
    // x is multiplicatively independent of the base, so the certified log
    // never ties with a rational exponent.
    CReal lx = CReal::ln(CReal(x)) / CReal::ln(CReal(Rat(base)));
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (lx >= CReal(exps[i].first) && lx < CReal(exps[i].second)) return i;
    return std::nullopt;
}

SmallBound small_bound(long n, long d, const Rat& delta, const Rat& H) {
    if (n < 2 || d < 1) throw config_error("small_bound requires n >= 2, d >= 1");
    if (delta <= Rat(0) || delta > Rat(1)) throw config_error("delta must lie in (0,1]");
    if (H < Rat(1)) throw config_error("H must be >= 1");
    CReal tail = CReal(Rat(4 * n)) * CReal::ln(CReal::ln(CReal(Rat(4) * H)));
    CReal inv_delta = CReal(Rat(1) / delta);
    SmallBound sb;
    sb.general = inv_delta *
                 (CReal(Rat(pow_int(Integer(1000 * n), static_cast<unsigned long>(n * d)))) + tail);
    sb.rational_case =
        inv_delta * (CReal(Rat(pow_int(Integer(10), static_cast<unsigned long>(3 * n)))) + tail);
    return sb;
}

}  // namespace subspace_lab
