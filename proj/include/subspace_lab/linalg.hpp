#pragma once

#include "subspace_lab/eigen_support.hpp"
#include "subspace_lab/heights.hpp"

#include <string>
#include <vector>

namespace subspace_lab {

// Exact elimination over Q or Q(xi). Eigen's own decompositions pivot by
// magnitude and are unsuitable for exact scalars; these free functions pivot
// on the first nonzero entry and stay fully exact.

inline bool scalar_is_zero(const Rat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const NFElem& x) { return x.is_zero(); }
inline Rat scalar_inv(const Rat& x) { return x.inv(); }
inline NFElem scalar_inv(const NFElem& x) { return x.inv(); }

// Reduced row echelon form in place; returns rank, optionally pivot columns.
template <typename S>
long rref_in_place(MatT<S>& A, std::vector<long>* pivot_cols = nullptr) {
    const long rows = A.rows(), cols = A.cols();
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (!scalar_is_zero(A(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) A.row(piv).swap(A.row(r));
        S inv = scalar_inv(A(r, c));
        for (long j = c; j < cols; ++j) A(r, j) = A(r, j) * inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || scalar_is_zero(A(i, c))) continue;
            S f = A(i, c);
            for (long j = c; j < cols; ++j) A(i, j) = A(i, j) - f * A(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

template <typename S>
long rank_of(MatT<S> A) {
    return rref_in_place(A);
}

// Determinant by exact Gaussian elimination (division based).
template <typename S>
S det(MatT<S> A) {
    if (A.rows() != A.cols()) throw invariant_violation("det of non-square matrix");
    const long n = A.rows();
    S result(1);
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long i = c; i < n; ++i)
            if (!scalar_is_zero(A(i, c))) { piv = i; break; }
        if (piv < 0) return S(0);
        if (piv != c) {
            A.row(piv).swap(A.row(c));
            result = -result;
        }
        result = result * A(c, c);
        S inv = scalar_inv(A(c, c));
        for (long i = c + 1; i < n; ++i) {
            if (scalar_is_zero(A(i, c))) continue;
            S f = A(i, c) * inv;
            for (long j = c; j < n; ++j) A(i, j) = A(i, j) - f * A(c, j);
        }
    }
    return result;
}

// Basis of the right null space {x : A x = 0}, one solution per row.
template <typename S>
MatT<S> kernel_of(MatT<S> A) {
    const long n = A.cols();
    std::vector<long> pivots;
    long r = rref_in_place(A, &pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (long p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    MatT<S> K(n - r, n);
    long k = 0;
    for (long f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        for (long j = 0; j < n; ++j) K(k, j) = S(0);
        K(k, f) = S(1);
        for (long i = 0; i < r; ++i) K(k, pivots[static_cast<std::size_t>(i)]) = -A(i, f);
        ++k;
    }
    return K;
}

template <typename S>
MatT<S> inverse(const MatT<S>& A) {
    if (A.rows() != A.cols()) throw invariant_violation("inverse of non-square matrix");
    const long n = A.rows();
    MatT<S> aug(n, 2 * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            aug(i, j) = A(i, j);
            aug(i, n + j) = S(i == j ? 1 : 0);
        }
    if (rref_in_place(aug) != n) throw invariant_violation("inverse of singular matrix");
    MatT<S> inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <typename S>
bool mats_equal(const MatT<S>& a, const MatT<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (!scalar_is_zero(a(i, j) - b(i, j))) return false;
    return true;
}

// Linear subspace with canonical RREF basis rows (unique per subspace,
// so equality is matrix equality).
template <typename S>
class SubspaceT {
public:
    SubspaceT() : ambient_(0), basis_(0, 0) {}

    static SubspaceT zero(long n) {
        SubspaceT s;
        s.ambient_ = n;
        s.basis_.resize(0, n);
        return s;
    }
    static SubspaceT full(long n) {
        SubspaceT s;
        s.ambient_ = n;
        s.basis_.resize(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) s.basis_(i, j) = S(i == j ? 1 : 0);
        return s;
    }
    static SubspaceT from_rows(MatT<S> rows) {
        SubspaceT s;
        s.ambient_ = rows.cols();
        long r = rref_in_place(rows);
        s.basis_ = rows.topRows(r);
        return s;
    }

    long ambient() const { return ambient_; }
    long dim() const { return basis_.rows(); }
    const MatT<S>& basis_rows() const { return basis_; }
    bool is_zero_space() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const VecT<S>& v) const {
        VecT<S> w = v;
        for (long i = 0; i < basis_.rows(); ++i) {
            long p = pivot_col(i);
            if (!scalar_is_zero(w(p))) {
                S f = w(p);
                for (long j = 0; j < ambient_; ++j) w(j) = w(j) - f * basis_(i, j);
            }
        }
        for (long j = 0; j < ambient_; ++j)
            if (!scalar_is_zero(w(j))) return false;
        return true;
    }

    bool contains(const SubspaceT& o) const {
        if (o.ambient_ != ambient_) return false;
        for (long i = 0; i < o.basis_.rows(); ++i) {
            VecT<S> v = o.basis_.row(i).transpose();
            if (!contains(v)) return false;
        }
        return true;
    }

    SubspaceT sum(const SubspaceT& o) const {
        check_ambient(o);
        MatT<S> stack(dim() + o.dim(), ambient_);
        stack.topRows(dim()) = basis_;
        stack.bottomRows(o.dim()) = o.basis_;
        return from_rows(std::move(stack));
    }

    // Annihilator {y : <b, y> = 0 for all basis rows b}.
    SubspaceT annihilator() const {
        return from_rows(kernel_of(MatT<S>(basis_)));
    }

    SubspaceT intersect(const SubspaceT& o) const {
        check_ambient(o);
        return annihilator().sum(o.annihilator()).annihilator();
    }

    friend bool operator==(const SubspaceT& a, const SubspaceT& b) {
        return a.ambient_ == b.ambient_ && mats_equal(a.basis_, b.basis_);
    }
    friend bool operator!=(const SubspaceT& a, const SubspaceT& b) { return !(a == b); }

private:
    long ambient_;
    MatT<S> basis_;

    long pivot_col(long row) const {
        for (long j = 0; j < ambient_; ++j)
            if (!scalar_is_zero(basis_(row, j))) return j;
        throw invariant_violation("zero basis row");
    }
    void check_ambient(const SubspaceT& o) const {
        if (o.ambient_ != ambient_) throw invariant_violation("ambient dimension mismatch");
    }
};

using Subspace = SubspaceT<Rat>;
using SubspaceF = SubspaceT<NFElem>;

// Primitive integer representatives of the basis rows.
std::vector<std::vector<Integer>> primitive_rows(const Subspace& U);
// Max height of the primitive basis rows (1 for the zero space).
Rat subspace_basis_height(const Subspace& U);
std::string subspace_str(const Subspace& U);

// Integer matrices and full-rank lattices in Q^n.
using ZMat = std::vector<std::vector<Integer>>;

// Canonical row Hermite normal form; zero rows dropped. Row style: the row
// span over Z is preserved, pivots positive, entries above a pivot reduced
// into [0, pivot).
ZMat hnf_rows(ZMat A);

class Lattice {
public:
    static Lattice standard(long n);
    // rows must span a rank-n lattice (k >= n rows allowed)
    static Lattice from_rows(const MatR& rows);

    long ambient() const { return basis_.cols(); }
    const MatR& basis() const { return basis_; }  // canonical HNF form
    Rat covolume() const;
    Lattice sum(const Lattice& o) const;
    Lattice intersect(const Lattice& o) const;
    Lattice dual() const;
    Lattice scaled(const Rat& c) const;
    bool contains(const VecR& v) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return mats_equal(a.basis_, b.basis_);
    }

private:
    MatR basis_;  // n x n, rows generate
};

}  // namespace subspace_lab
