#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subspace_lab/linalg.hpp"

#include <random>

using namespace subspace_lab;

namespace {
MatR mat(std::initializer_list<std::initializer_list<long>> rows) {
    MatR m(static_cast<long>(rows.size()), static_cast<long>(rows.begin()->size()));
    long i = 0;
    for (const auto& r : rows) {
        long j = 0;
        for (long v : r) m(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

MatR rand_mat(std::mt19937_64& rng, long r, long c) {
    std::uniform_int_distribution<long> d(-9, 9);
    MatR m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = Rat(d(rng));
    return m;
}
}  // namespace

TEST_CASE("rank and rref") {
    MatR a = mat({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    CHECK(rank_of(a) == 2);
    CHECK(rank_of(mat({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_of(mat({{1, 0}, {0, 1}})) == 2);

    MatR b = mat({{2, 4}, {1, 3}});
    std::vector<long> pivots;
    CHECK(rref_in_place(b, &pivots) == 2);
    CHECK(pivots == std::vector<long>{0, 1});
    CHECK(mats_equal(b, mat({{1, 0}, {0, 1}})));
}

TEST_CASE("determinant is exact") {
    CHECK(det(mat({{1, 2}, {3, 4}})) == Rat(-2));
    CHECK(det(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == Rat(30));
    CHECK(det(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == Rat(0));
    CHECK_THROWS_AS(det(mat({{1, 2, 3}, {4, 5, 6}})), invariant_violation);
    // 4x4 Hilbert-style matrix: det(H4) = 1/6048000
    MatR h(4, 4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) h(i, j) = Rat(Integer(1), Integer(i + j + 1));
    CHECK(det(h) == Rat(Integer(1), Integer(6048000)));
}

TEST_CASE("determinant multiplies and detects row swaps") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 60; ++t) {
        MatR a = rand_mat(rng, 3, 3), b = rand_mat(rng, 3, 3);
        CHECK(det(MatR(a * b)) == det(a) * det(b));
        MatR sw = a;
        sw.row(0).swap(sw.row(1));
        CHECK(det(sw) == -det(a));
    }
}

TEST_CASE("kernel really annihilates") {
    MatR a = mat({{1, 2, 3}, {2, 4, 6}});
    MatR k = kernel_of(a);
    CHECK(k.rows() == 2);
    MatR prod = a * k.transpose();
    for (long i = 0; i < prod.rows(); ++i)
        for (long j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
    CHECK(kernel_of(mat({{1, 0}, {0, 1}})).rows() == 0);
}

TEST_CASE("inverse round trips and rejects singular input") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 40) {
        MatR a = rand_mat(rng, 3, 3);
        if (det(a).is_zero()) continue;
        MatR inv = inverse(a);
        MatR prod = a * inv;
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 3; ++j) CHECK(prod(i, j) == Rat(i == j ? 1 : 0));
        ++done;
    }
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), invariant_violation);
}

TEST_CASE("subspace canonical form and membership") {
    Subspace s = Subspace::from_rows(mat({{2, 4, 0}, {1, 2, 1}}));
    CHECK(s.dim() == 2);
    CHECK(s.ambient() == 3);
    // canonical RREF basis makes equality representation independent
    Subspace t = Subspace::from_rows(mat({{1, 2, 0}, {0, 0, 3}, {1, 2, 3}}));
    CHECK(s == t);
    VecR v(3);
    v << Rat(3), Rat(6), Rat(-2);
    CHECK(s.contains(v));
    VecR w(3);
    w << Rat(0), Rat(1), Rat(0);
    CHECK(!s.contains(w));

    CHECK(Subspace::zero(3).dim() == 0);
    CHECK(Subspace::full(3).is_full());
    CHECK(Subspace::full(3).contains(s));
    CHECK(s.contains(Subspace::zero(3)));
}

TEST_CASE("sum intersect annihilator") {
    Subspace a = Subspace::from_rows(mat({{1, 0, 0}, {0, 1, 0}}));
    Subspace b = Subspace::from_rows(mat({{0, 1, 0}, {0, 0, 1}}));
    CHECK(a.sum(b).is_full());
    Subspace meet = a.intersect(b);
    CHECK(meet.dim() == 1);
    VecR e2(3);
    e2 << Rat(0), Rat(1), Rat(0);
    CHECK(meet.contains(e2));
    CHECK(a.annihilator().annihilator() == a);
    CHECK(Subspace::zero(3).annihilator().is_full());

    // dim(a) + dim(b) = dim(a+b) + dim(a^b) on random spans
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        Subspace x = Subspace::from_rows(rand_mat(rng, 2, 4));
        Subspace y = Subspace::from_rows(rand_mat(rng, 2, 4));
        CHECK(x.dim() + y.dim() == x.sum(y).dim() + x.intersect(y).dim());
        CHECK(x.sum(y).contains(x));
        CHECK(x.contains(x.intersect(y)));
    }
}

TEST_CASE("subspace over a number field") {
    auto F = std::make_shared<const NumberField>(
        AlgebraicReal(Poly({Rat(-2), Rat(0), Rat(1)}), Interval(Rat(1), Rat(2))));
    NFElem s = NFElem::generator(F);
    MatF rows(1, 2);
    rows(0, 0) = NFElem(Rat(1));
    rows(0, 1) = s;
    SubspaceF U = SubspaceF::from_rows(rows);
    VecF v(2);
    v << s, NFElem(Rat(2));  // sqrt2 * (1, sqrt2)
    CHECK(U.contains(v));
    VecF w(2);
    w << NFElem(Rat(1)), NFElem(Rat(1));
    CHECK(!U.contains(w));
}

TEST_CASE("primitive rows and basis height") {
    Subspace s = Subspace::from_rows(mat({{2, 4, 6}}));
    auto pr = primitive_rows(s);
    REQUIRE(pr.size() == 1);
    CHECK(pr[0] == std::vector<Integer>{Integer(1), Integer(2), Integer(3)});
    CHECK(subspace_basis_height(s) == Rat(3));
    CHECK(subspace_basis_height(Subspace::zero(2)) == Rat(1));
}

TEST_CASE("hermite normal form is canonical") {
    ZMat a = {{2, 0}, {1, 1}};
    ZMat b = {{1, 1}, {2, 0}};
    CHECK(hnf_rows(a) == hnf_rows(b));
    ZMat with_zero = {{1, 1}, {2, 2}};
    auto h = hnf_rows(with_zero);
    REQUIRE(h.size() == 1);
    CHECK(h[0] == std::vector<Integer>{Integer(1), Integer(1)});
}

TEST_CASE("lattice covolume and duality") {
    CHECK(Lattice::standard(3).covolume() == Rat(1));
    MatR d = mat({{2, 0}, {0, 3}});
    Lattice L = Lattice::from_rows(d);
    CHECK(L.covolume() == Rat(6));
    CHECK(L.dual().covolume() == Rat(Integer(1), Integer(6)));
    CHECK(L.scaled(Rat(Integer(1), Integer(2))).covolume() == Rat(Integer(3), Integer(2)));
    VecR v(2);
    v << Rat(4), Rat(-3);
    CHECK(L.contains(v));
    VecR w(2);
    w << Rat(1), Rat(0);
    CHECK(!L.contains(w));
    // redundant generating rows are fine
    MatR g(3, 2);
    g << Rat(2), Rat(0), Rat(0), Rat(3), Rat(2), Rat(3);
    CHECK(Lattice::from_rows(g) == L);
}

TEST_CASE("lattice sum and intersection satisfy the index identity") {
    std::mt19937_64 rng(88);
    std::uniform_int_distribution<long> d(-4, 4);
    int done = 0;
    while (done < 40) {
        MatR a(2, 2), b(2, 2);
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j) {
                a(i, j) = Rat(d(rng));
                b(i, j) = Rat(d(rng));
            }
        if (det(a).is_zero() || det(b).is_zero()) continue;
        Lattice A = Lattice::from_rows(a), B = Lattice::from_rows(b);
        Lattice S = A.sum(B), I = A.intersect(B);
        // covol(A meet B) * covol(A + B) = covol(A) * covol(B)
        CHECK(I.covolume() * S.covolume() == A.covolume() * B.covolume());
        // containments
        for (long i = 0; i < 2; ++i) {
            CHECK(S.contains(VecR(A.basis().row(i).transpose())));
            CHECK(A.contains(VecR(I.basis().row(i).transpose())));
            CHECK(B.contains(VecR(I.basis().row(i).transpose())));
        }
        ++done;
    }
}
