#include "subspace_lab/linalg.hpp"

#include <sstream>

namespace subspace_lab {

std::vector<std::vector<Integer>> primitive_rows(const Subspace& U) {
    std::vector<std::vector<Integer>> out;
    const MatR& B = U.basis_rows();
    for (long i = 0; i < B.rows(); ++i) {
        std::vector<Rat> row(static_cast<std::size_t>(B.cols()));
        for (long j = 0; j < B.cols(); ++j) row[static_cast<std::size_t>(j)] = B(i, j);
        out.push_back(primitive_integer_vector(row));
    }
    return out;
}

Rat subspace_basis_height(const Subspace& U) {
    Rat h(1);
    for (const auto& row : primitive_rows(U)) {
        std::vector<Rat> r;
        r.reserve(row.size());
        for (const Integer& c : row) r.emplace_back(c);
        h = max(h, height_vector(r));
    }
    return h;
}

std::string subspace_str(const Subspace& U) {
    if (U.is_zero_space()) return "0";
    std::ostringstream os;
    os << "span{";
    auto rows = primitive_rows(U);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? ", (" : "(");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            os << (j ? ", " : "") << rows[i][j].get_str();
        os << ")";
    }
    os << "}";
    return os.str();
}

ZMat hnf_rows(ZMat A) {
    if (A.empty()) return A;
    const std::size_t cols = A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
        // Euclidean elimination in column c below row r.
        for (;;) {
            std::size_t piv = r;
            bool found = false;
            Integer best(0);
            for (std::size_t i = r; i < A.size(); ++i) {
                if (A[i][c] == 0) continue;
                Integer a = A[i][c] < 0 ? Integer(-A[i][c]) : A[i][c];
                if (!found || a < best) {
                    best = a;
                    piv = i;
                    found = true;
                }
            }
            if (!found) break;
            std::swap(A[r], A[piv]);
            bool clean = true;
            for (std::size_t i = r + 1; i < A.size(); ++i) {
                if (A[i][c] == 0) continue;
                Integer q;
                // round-to-nearest quotient keeps entries small
                mpz_fdiv_q(q.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) A[i][j] -= q * A[r][j];
                if (A[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (A[r][c] == 0) continue;  // no pivot in this column
        if (A[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) A[r][j] = -A[r][j];
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) A[i][j] -= q * A[r][j];
        }
        ++r;
    }
    A.resize(r);
    return A;
}

Lattice Lattice::standard(long n) {
    MatR I(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) I(i, j) = Rat(i == j ? 1 : 0);
    Lattice L;
    L.basis_ = std::move(I);
    return L;
}

Lattice Lattice::from_rows(const MatR& rows) {
    const long n = rows.cols();
    Integer den(1);
    for (long i = 0; i < rows.rows(); ++i)
        for (long j = 0; j < n; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rows(i, j).den().get_mpz_t());
    ZMat Z(static_cast<std::size_t>(rows.rows()), std::vector<Integer>(static_cast<std::size_t>(n)));
    for (long i = 0; i < rows.rows(); ++i)
        for (long j = 0; j < n; ++j)
            Z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (rows(i, j) * Rat(den)).num();
    ZMat H = hnf_rows(std::move(Z));
    if (static_cast<long>(H.size()) != n)
        throw invariant_violation("lattice basis does not have full rank");
    Lattice L;
    L.basis_.resize(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            L.basis_(i, j) = Rat(H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], den);
    return L;
}

Rat Lattice::covolume() const { return abs(det(MatR(basis_))); }

Lattice Lattice::sum(const Lattice& o) const {
    if (o.ambient() != ambient()) throw invariant_violation("lattice ambient mismatch");
    MatR stack(basis_.rows() + o.basis_.rows(), ambient());
    stack.topRows(basis_.rows()) = basis_;
    stack.bottomRows(o.basis_.rows()) = o.basis_;
    return from_rows(stack);
}

Lattice Lattice::dual() const {
    MatR inv = inverse(MatR(basis_));
    return from_rows(MatR(inv.transpose()));
}

Lattice Lattice::intersect(const Lattice& o) const {
    // dual(dual(L1) + dual(L2))
    return dual().sum(o.dual()).dual();
}

Lattice Lattice::scaled(const Rat& c) const {
    if (c.is_zero()) throw invariant_violation("lattice scale by zero");
    MatR rows = basis_;
    for (long i = 0; i < rows.rows(); ++i)
        for (long j = 0; j < rows.cols(); ++j) rows(i, j) *= c;
    return from_rows(rows);
}

bool Lattice::contains(const VecR& v) const {
    // v in L iff v expressed in the basis rows has integer coordinates:
    // y * B = v^T  =>  y = v^T * B^{-1}.
    MatR inv = inverse(MatR(basis_));
    for (long j = 0; j < ambient(); ++j) {
        Rat y(0);
        for (long i = 0; i < ambient(); ++i) y += v(i) * inv(i, j);
        if (!y.is_integer()) return false;
    }
    return true;
}

}  // namespace subspace_lab
