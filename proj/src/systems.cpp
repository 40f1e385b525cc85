#include "subspace_lab/systems.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace subspace_lab {

const PlaceBlock& FormSystem::infinite_block() const {
    for (const auto& pb : places)
        if (pb.v.infinite) return pb;
    throw invariant_violation("system has no infinite place");
}

namespace {

std::string place_name(const Place& v) { return v.infinite ? "inf" : v.p.get_str(); }

// Exponent as (num, den) small longs; den > 0.
std::pair<long, unsigned long> small_exponent(const Rat& c) {
    if (mpz_sizeinbase(c.num().get_mpz_t(), 2) > 24 || mpz_sizeinbase(c.den().get_mpz_t(), 2) > 24)
        throw config_error("exponent too large: " + c.str());
    return {c.num().get_si(), static_cast<unsigned long>(c.den().get_ui())};
}

MatF coefficient_matrix(const PlaceBlock& pb, long n) {
    MatF M(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            M(i, j) = pb.forms[static_cast<std::size_t>(i)].coeffs()[static_cast<std::size_t>(j)];
    return M;
}

}  // namespace

std::vector<std::string> validate_system(const FormSystem& sys) {
    std::vector<std::string> bad;
    const long n = sys.n;
    if (n < 2) bad.push_back("dimension must be at least 2");
    if (!(sys.delta > Rat(0) && sys.delta <= Rat(1)))
        bad.push_back("delta must satisfy 0 < delta <= 1");
    if (sys.H < Rat(1)) bad.push_back("height bound H must be at least 1");
    if (sys.D < 1) bad.push_back("degree bound D must be at least 1");

    long inf_count = 0;
    for (const auto& pb : sys.places) inf_count += pb.v.infinite ? 1 : 0;
    if (inf_count != 1) bad.push_back("system needs exactly one infinite place");
    for (std::size_t i = 0; i < sys.places.size(); ++i)
        for (std::size_t j = i + 1; j < sys.places.size(); ++j)
            if (sys.places[i].v == sys.places[j].v)
                bad.push_back("duplicate place " + place_name(sys.places[i].v));

    bool shape_ok = true;
    for (const auto& pb : sys.places) {
        if (static_cast<long>(pb.forms.size()) != n || static_cast<long>(pb.exponents.size()) != n) {
            bad.push_back("place " + place_name(pb.v) + " needs exactly n forms and n exponents");
            shape_ok = false;
            continue;
        }
        for (const auto& f : pb.forms)
            if (f.arity() != n) {
                bad.push_back("form arity mismatch at place " + place_name(pb.v));
                shape_ok = false;
            }
        if (!(pb.C > Rat(0))) bad.push_back("C at place " + place_name(pb.v) + " must be positive");
        if (!pb.v.infinite && !is_prime(pb.v.p))
            bad.push_back("finite place " + place_name(pb.v) + " is not prime");
        if (!pb.v.infinite)
            for (const auto& f : pb.forms)
                if (!f.is_rational())
                    bad.push_back("finite place " + place_name(pb.v) + " has irrational coefficients");
    }
    if (!shape_ok) return bad;  // remaining checks assume the shape

    // max_i c_iv = s(v) and the exponent sum.
    Rat total(0);
    for (const auto& pb : sys.places) {
        Rat mx = pb.exponents[0];
        for (const Rat& c : pb.exponents) {
            mx = max(mx, c);
            total += c;
        }
        Rat s = pb.v.infinite ? Rat(1) : Rat(0);
        if (mx != s)
            bad.push_back("max exponent at place " + place_name(pb.v) + " is " + mx.str() +
                          ", expected " + s.str());
    }
    if (!(total <= -sys.delta))
        bad.push_back("exponent sum " + total.str() + " exceeds -delta = " + (-sys.delta).str());

    // Independence and the determinant product condition.
    bool dets_ok = true;
    Rat finite_dets(1);
    NFElem inf_det(Rat(1));
    for (const auto& pb : sys.places) {
        NFElem d = det(coefficient_matrix(pb, n));
        if (d.is_zero()) {
            bad.push_back("forms at place " + place_name(pb.v) + " are linearly dependent");
            dets_ok = false;
        } else if (pb.v.infinite) {
            inf_det = d;
        } else {
            finite_dets *= abs_value(d.rational_value(), pb.v);
        }
    }
    if (dets_ok) {
        Rat prodC(1);
        for (const auto& pb : sys.places) prodC *= pb.C;
        // (prod C_v)^n <= prod_v |det_v|_v, with the infinite factor algebraic.
        Rat lhs = prodC.pow(n) / finite_dets;
        if ((NFElem(lhs) - abs(inf_det)).sign() > 0)
            bad.push_back("prod C_v exceeds prod |det|_v^(1/n)");
    }

    // Distinct forms across all places.
    std::vector<const LinearForm*> all;
    for (const auto& pb : sys.places)
        for (const auto& f : pb.forms) all.push_back(&f);
    long distinct = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i && !seen; ++j) seen = (*all[i] == *all[j]);
        if (!seen) ++distinct;
    }
    if (distinct > sys.R)
        bad.push_back("system uses " + std::to_string(distinct) + " distinct forms, R = " +
                      std::to_string(sys.R));

    // Per-coefficient degree and height bounds.
    const long cap = precision_cap();
    for (const auto& pb : sys.places)
        for (std::size_t i = 0; i < pb.forms.size(); ++i)
            for (const NFElem& c : pb.forms[i].coeffs()) {
                if (c.is_rational()) {
                    if (height_rational(c.rational_value()) > sys.H)
                        bad.push_back("coefficient " + c.str() + " has height above H");
                    continue;
                }
                Poly mp = min_poly_of(c);
                if (mp.degree() > sys.D)
                    bad.push_back("coefficient " + c.str() + " has degree " +
                                  std::to_string(mp.degree()) + " above D");
                bool decided = false;
                for (long bits = 64; bits <= cap && !decided; bits *= 2) {
                    Interval h = mahler_height_enclosure(mp, static_cast<unsigned long>(bits));
                    if (h.lo > sys.H) {
                        bad.push_back("coefficient " + c.str() + " has height above H");
                        decided = true;
                    } else if (h.hi <= sys.H) {
                        decided = true;
                    }
                }
                if (!decided)
                    throw undecided_comparison("coefficient height comparison undecided", cap);
            }

    return bad;
}

bool at_least_rational_power(const Rat& height, long n, const Rat& e) {
    // height >= n^e with e = a/b: height^b >= n^a. Heights are >= 1, n >= 2.
    auto [a, b] = small_exponent(e);
    if (a <= 0) return true;  // n^e <= 1 <= height
    Rat lhs = height.pow(static_cast<long>(b));
    Rat rhs = Rat(pow_int(Integer(n), static_cast<unsigned long>(a)));
    return lhs >= rhs;
}

bool classify_large(const FormSystem& sys, const Rat& height) {
    if (height < sys.H) return false;
    return at_least_rational_power(height, sys.n, Rat(2 * sys.n) / sys.delta);
}

namespace {

// Exact acceptance check of every inequality for one candidate.
// Comparisons clear the rational exponent c = a/b by raising to b.
bool check_candidate(const FormSystem& sys, const std::vector<Integer>& x, const Rat& h) {
    for (const auto& pb : sys.places) {
        for (std::size_t i = 0; i < pb.forms.size(); ++i) {
            auto [a, b] = small_exponent(pb.exponents[i]);
            Rat rhs = pb.C.pow(static_cast<long>(b)) * h.pow(a);
            NFElem val = pb.forms[i].eval(x);
            if (pb.v.infinite) {
                NFElem lhs = pow(abs(val), static_cast<long>(b));
                if ((lhs - NFElem(rhs)).sign() > 0) return false;
            } else {
                Rat lv = val.is_zero() ? Rat(0) : abs_value(val.rational_value(), pb.v);
                if (lv.pow(static_cast<long>(b)) > rhs) return false;
            }
        }
    }
    return true;
}

std::vector<SolutionValue> record_values(const FormSystem& sys, const std::vector<Integer>& x) {
    std::vector<SolutionValue> vals;
    for (const auto& pb : sys.places)
        for (std::size_t i = 0; i < pb.forms.size(); ++i) {
            NFElem val = pb.forms[i].eval(x);
            SolutionValue sv;
            sv.v = pb.v;
            sv.form_index = static_cast<long>(i);
            if (pb.v.infinite) {
                if (val.is_rational()) {
                    sv.value = Interval(abs(val.rational_value()));
                    sv.exact = true;
                } else {
                    sv.value = abs(val.enclosure(64));
                    sv.exact = false;
                }
            } else {
                sv.value = Interval(val.is_zero() ? Rat(0) : abs_value(val.rational_value(), pb.v));
                sv.exact = true;
            }
            vals.push_back(std::move(sv));
        }
    return vals;
}

bool canonical_sign_ok(const std::vector<Integer>& x) {
    for (const Integer& c : x) {
        if (c == 0) continue;
        return c > 0;
    }
    return false;  // zero vector is not a solution
}

struct Pruner {
    std::size_t pivot = 0;
    const LinearForm* form = nullptr;
    Rat c;       // exponent of the pruning form
    Rat C;       // C at infinity
    Interval a_iv;  // sign-determined enclosure of the pivot coefficient
};

Pruner make_pruner(const FormSystem& sys) {
    const PlaceBlock& inf = sys.infinite_block();
    std::size_t best = 0;
    for (std::size_t i = 1; i < inf.exponents.size(); ++i)
        if (inf.exponents[i] < inf.exponents[best]) best = i;
    Pruner pr;
    pr.form = &inf.forms[best];
    pr.c = inf.exponents[best];
    pr.C = inf.C;
    // Pivot: nonzero coefficient of largest magnitude (heuristic, soundness
    // does not depend on the choice).
    Rat best_mag(-1);
    for (std::size_t j = 0; j < pr.form->coeffs().size(); ++j) {
        const NFElem& cj = pr.form->coeffs()[j];
        if (cj.is_zero()) continue;
        Rat mag = abs(cj.enclosure(32)).hi;
        if (mag > best_mag) {
            best_mag = mag;
            pr.pivot = j;
        }
    }
    const NFElem& a = pr.form->coeffs()[pr.pivot];
    const long cap = precision_cap();
    for (long bits = 32; bits <= cap; bits *= 2) {
        pr.a_iv = a.enclosure(static_cast<unsigned long>(bits));
        if (!pr.a_iv.contains_zero()) return pr;
    }
    throw undecided_comparison("pivot coefficient sign undecided", cap);
}

// Upper bound for C*H^c over all admissible heights of a candidate in the
// cell: H >= mrest and H <= bound.
Rat prune_threshold(const Pruner& pr, const Integer& mrest, const Integer& bound) {
    auto [a, b] = small_exponent(pr.c);
    Integer base = (a < 0) ? mrest : bound;
    Rat powed = Rat(base).pow(a);  // base^a exact rational
    Interval root = nth_root(Interval(powed), b, 64);
    return (Interval(pr.C) * root).hi;
}

}  // namespace

EnumerationResult enumerate_solutions(const FormSystem& sys, const Rat& B, int threads) {
    {
        auto viol = validate_system(sys);
        if (!viol.empty()) throw config_error("system rejected: " + viol.front());
    }
    EnumerationResult out;
    if (B < Rat(1)) return out;
    Integer Bz = B.floor();
    if (mpz_sizeinbase(Bz.get_mpz_t(), 2) > 24) throw config_error("height bound too large to enumerate");
    const long lb = Bz.get_si();
    const long n = sys.n;
    Pruner pr = make_pruner(sys);

    std::vector<std::size_t> outer;
    for (long j = 0; j < n; ++j)
        if (static_cast<std::size_t>(j) != pr.pivot) outer.push_back(static_cast<std::size_t>(j));

    struct CellResult {
        std::vector<SolutionRecord> recs;
        std::vector<std::vector<Integer>> boundary;
    };

    auto process_cell = [&](const std::vector<long>& outer_vals, CellResult& res) {
        // Canonical-sign pre-filter on coordinates before the pivot.
        Integer mrest(0);
        {
            bool decided_sign = false;
            for (std::size_t k = 0; k < outer.size(); ++k) {
                long v = outer_vals[k];
                if (outer[k] < pr.pivot && !decided_sign && v != 0) {
                    if (v < 0) return;
                    decided_sign = true;
                }
                Integer av(v < 0 ? -v : v);
                if (av > mrest) mrest = av;
            }
        }
        if (mrest == 0) return;  // pivot-only line handled separately
        std::vector<Integer> x(static_cast<std::size_t>(n), Integer(0));
        for (std::size_t k = 0; k < outer.size(); ++k) x[outer[k]] = Integer(outer_vals[k]);

        // r = sum over non-pivot coordinates of a_j x_j.
        NFElem r;
        for (std::size_t k = 0; k < outer.size(); ++k) {
            if (outer_vals[k] == 0) continue;
            r += pr.form->coeffs()[outer[k]] * NFElem(Rat(outer_vals[k]));
        }
        Rat t = prune_threshold(pr, mrest, Bz);
        Interval r_iv = r.is_zero() ? Interval(Rat(0)) : r.enclosure(64);
        Interval numer = (-r_iv) + Interval(-t, t);
        Interval quot = numer / pr.a_iv;
        Integer lo_i = quot.lo.floor(), hi_i = quot.hi.ceil();
        if (lo_i < -Bz) lo_i = -Bz;
        if (hi_i > Bz) hi_i = Bz;
        for (Integer xp = lo_i; xp <= hi_i; ++xp) {
            x[pr.pivot] = xp;
            if (!canonical_sign_ok(x)) continue;
            Integer axp = xp < 0 ? Integer(-xp) : xp;
            Rat h(axp > mrest ? axp : mrest);
            try {
                if (!check_candidate(sys, x, h)) continue;
                SolutionRecord rec;
                rec.x = x;
                rec.height = h;
                rec.values = record_values(sys, x);
                rec.large = classify_large(sys, h);
                res.recs.push_back(std::move(rec));
            } catch (const undecided_comparison&) {
                res.boundary.push_back(x);
            }
        }
        x[pr.pivot] = Integer(0);
    };

    // Iterate outer coordinates; first outer coordinate split into slabs.
    const std::size_t n_out = outer.size();
    auto run_slab = [&](long first_lo, long first_hi, CellResult& res) {
        std::vector<long> vals(n_out, 0);
        if (n_out == 0) return;
        for (long v0 = first_lo; v0 <= first_hi; ++v0) {
            vals[0] = v0;
            if (n_out == 1) {
                process_cell(vals, res);
                continue;
            }
            for (std::size_t k = 1; k < n_out; ++k) vals[k] = -lb;
            for (;;) {
                process_cell(vals, res);
                std::size_t k = n_out - 1;
                for (;;) {
                    if (vals[k] < lb) {
                        ++vals[k];
                        break;
                    }
                    vals[k] = -lb;
                    if (k == 1) {
                        k = 0;
                        break;
                    }
                    --k;
                }
                if (k == 0) break;
            }
        }
    };

    int nthreads = threads < 1 ? 1 : threads;
    std::vector<CellResult> results;
    if (n_out == 0) {
        nthreads = 1;
        results.resize(1);
    } else {
        long span = 2 * lb + 1;
        if (nthreads > span) nthreads = static_cast<int>(span);
        results.resize(static_cast<std::size_t>(nthreads));
        std::vector<std::thread> pool;
        long chunk = span / nthreads, extra = span % nthreads;
        long start = -lb;
        for (int tid = 0; tid < nthreads; ++tid) {
            long len = chunk + (tid < extra ? 1 : 0);
            long lo = start, hi = start + len - 1;
            start += len;
            pool.emplace_back([&, lo, hi, tid] { run_slab(lo, hi, results[static_cast<std::size_t>(tid)]); });
        }
        for (auto& th : pool) th.join();
    }

    // Pivot-only candidates: x = k * e_pivot, k = 1..B (canonical sign).
    CellResult extra_res;
    {
        std::vector<Integer> x(static_cast<std::size_t>(n), Integer(0));
        for (long k = 1; k <= lb; ++k) {
            x[pr.pivot] = Integer(k);
            Rat h{Integer(k)};
            try {
                if (check_candidate(sys, x, h)) {
                    SolutionRecord rec;
                    rec.x = x;
                    rec.height = h;
                    rec.values = record_values(sys, x);
                    rec.large = classify_large(sys, h);
                    extra_res.recs.push_back(std::move(rec));
                }
            } catch (const undecided_comparison&) {
                extra_res.boundary.push_back(x);
            }
        }
    }

    for (auto& res : results) {
        for (auto& r : res.recs) out.solutions.push_back(std::move(r));
        for (auto& b : res.boundary) out.boundary.push_back(std::move(b));
    }
    for (auto& r : extra_res.recs) out.solutions.push_back(std::move(r));
    for (auto& b : extra_res.boundary) out.boundary.push_back(std::move(b));

    auto lex_less = [](const std::vector<Integer>& a, const std::vector<Integer>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    std::sort(out.solutions.begin(), out.solutions.end(),
              [&](const SolutionRecord& a, const SolutionRecord& b) {
                  if (a.height != b.height) return a.height < b.height;
                  return lex_less(a.x, b.x);
              });
    std::sort(out.boundary.begin(), out.boundary.end(), lex_less);
    return out;
}

}  // namespace subspace_lab
