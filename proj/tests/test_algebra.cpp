#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homint/algebra.hpp"

using namespace homint;

namespace {

const std::vector<std::vector<int>> z2_table{{0, 1}, {1, 0}};
const std::vector<std::vector<int>> z3_table{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

// 2x2 upper triangular matrices: a small noncommutative testbed
AlgebraPtr upper_triangular() {
    auto F = Field::rationals();
    auto z = F->zero();
    auto o = F->one();
    // basis: E11, E12, E22
    std::vector<std::vector<std::vector<Scalar>>> c(
        3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>{z, z, z}));
    c[0][0] = {o, z, z};
    c[0][1] = {z, o, z};
    c[1][2] = {z, o, z};
    c[2][2] = {z, z, o};
    return Algebra::finite(F, {"E11", "E12", "E22"}, c, {o, z, o});
}

// right translation by group element g on indicator functions
LinOp right_translation(const AlgebraPtr& alg, int g) {
    const auto& table = alg->group_table();
    size_t d = alg->dim();
    int ginv = 0;
    for (size_t j = 0; j < d; ++j)
        if (table[g][j] == static_cast<int>(*alg->group_identity())) ginv = static_cast<int>(j);
    return LinOp::from_rule(alg, [&](size_t x) {
        return alg->basis_element(static_cast<size_t>(table[x][ginv]));
    });
}

Matrix random_square(std::mt19937& rng, const FieldPtr& f, size_t d) {
    std::uniform_int_distribution<long> val(-3, 3);
    Matrix m(f, d, d);
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) m.at(r, c) = Scalar(val(rng));
    return m;
}

}  // namespace

TEST_CASE("construction rejects broken structure constants") {
    auto F = Field::rationals();
    auto z = F->zero();
    auto o = F->one();
    // functions on three points with one perturbed product e_0*e_1 = e_2
    std::vector<std::vector<std::vector<Scalar>>> c(
        3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>{z, z, z}));
    for (size_t i = 0; i < 3; ++i) c[i][i][i] = o;
    auto good = Algebra::finite(F, {"p0", "p1", "p2"}, c, {o, o, o});
    CHECK(good->dim() == 3);
    c[0][1][2] = o;
    CHECK_THROWS_AS(Algebra::finite(F, {"p0", "p1", "p2"}, c, {o, o, o}), AlgebraError);
    // perturbed unit coordinate breaks the unit axiom
    c[0][1][2] = z;
    CHECK_THROWS_AS(Algebra::finite(F, {"p0", "p1", "p2"}, c, {o + o, o, o}), AlgebraError);
}

TEST_CASE("group function algebra products") {
    auto A = Algebra::functions_on_group(z2_table, {"e_e", "e_g"});
    Element ee = A->basis_element(0), eg = A->basis_element(1);
    CHECK((ee * eg).is_zero());
    CHECK(ee * ee == ee);
    CHECK(A->unit() * eg == eg);
    for (size_t i = 0; i < A->dim(); ++i)
        CHECK(A->unit() * A->basis_element(i) == A->basis_element(i));
    CHECK_THROWS_AS(Algebra::functions_on_group({{0, 1}, {0, 1}}), AlgebraError);
}

TEST_CASE("mixed-algebra operands are rejected") {
    auto A = Algebra::functions_on_group(z2_table);
    auto B = Algebra::functions_on_group(z2_table);
    CHECK_THROWS_AS(A->basis_element(0) * B->basis_element(0), AlgebraError);
}

TEST_CASE("laurent-grassmann algebra") {
    auto A = Algebra::laurent_grassmann(2);
    auto idx = [&](long k, bool odd) { return *A->index_of_key({k, odd}); };
    Element z = A->basis_element(idx(1, false));
    Element th = A->basis_element(idx(0, true));
    CHECK((th * th).is_zero());
    CHECK(z * th == th * z);
    Element z2 = A->basis_element(idx(2, false));
    CHECK((z + th) * (z - th) == z2);
    SUBCASE("escaping the degree headroom raises") {
        Element top = A->basis_element(idx(A->degree_cap(), false));
        CHECK_THROWS_AS(top * z, WindowOverflowError);
    }
    SUBCASE("window basis spans |k| <= W") {
        CHECK(A->check_basis().size() == 2 * (2 * 2 + 1));
    }
}

TEST_CASE("grassmann extension of a commutative base") {
    auto base = Algebra::functions_on_group(z2_table, {"e_e", "e_g"});
    auto A = Algebra::grassmann_extension(base);
    CHECK(A->dim() == 4);
    Element th = A->basis_element(2) + A->basis_element(3);  // theta = unit * theta
    CHECK((th * th).is_zero());
    CHECK_THROWS_AS(Algebra::grassmann_extension(upper_triangular()), AlgebraError);
}

TEST_CASE("operator application and composition") {
    auto A = Algebra::functions_on_group(z2_table, {"e_e", "e_g"});
    LinOp rg = right_translation(A, 1);
    SUBCASE("identity composes neutrally") {
        CHECK(LinOp::identity(A).compose(rg) == rg);
        CHECK(rg.compose(LinOp::identity(A)) == rg);
    }
    SUBCASE("right translation is an involution on Z2") {
        CHECK(rg.compose(rg) == LinOp::identity(A));
    }
    SUBCASE("composition applies the right factor first") {
        LinOp proj = LinOp::from_rule(A, [&](size_t i) {
            return i == 0 ? A->basis_element(0) : A->zero();
        });
        // (proj after rg)(e_g) = proj(e_e) = e_e
        CHECK(proj.compose(rg).apply(A->basis_element(1)) == A->basis_element(0));
        CHECK(rg.compose(proj).apply(A->basis_element(1)).is_zero());
    }
    SUBCASE("parity on the grassmann extension is an involution") {
        auto E = Algebra::grassmann_extension(A);
        LinOp parity = LinOp::from_rule(E, [&](size_t i) {
            Element b = E->basis_element(i);
            return i < 2 ? b : -b;
        });
        CHECK(parity.compose(parity) == LinOp::identity(E));
    }
}

TEST_CASE("bullet product") {
    auto A = Algebra::functions_on_group(z2_table, {"e_e", "e_g"});
    LinOp rg = right_translation(A, 1);
    SUBCASE("identity matrix is the bullet unit") {
        std::mt19937 rng(23);
        OpMatrix F(A, 2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j)
                F.at(i, j) = LinOp::from_matrix(A, random_square(rng, A->field(), 2));
        auto I = OpMatrix::identity(A, 2);
        CHECK(I.bullet(F).equal_on_check_basis(F));
        CHECK(F.bullet(I).equal_on_check_basis(F));
    }
    SUBCASE("size one reduces to composition") {
        OpMatrix F(A, 1), G(A, 1);
        F.at(0, 0) = rg;
        G.at(0, 0) = LinOp::from_rule(A, [&](size_t i) {
            return i == 0 ? A->basis_element(0) : A->zero();
        });
        CHECK(F.bullet(G).at(0, 0) == F.at(0, 0).compose(G.at(0, 0)));
    }
    SUBCASE("diagonal parity twist squares to the identity") {
        auto E = Algebra::laurent_grassmann(2);
        LinOp parity = LinOp::from_rule(E, [&](size_t i) {
            Element b = E->basis_element(i);
            return E->key(i).odd ? -b : b;
        });
        OpMatrix sigma(E, 2);
        sigma.at(0, 0) = LinOp::identity(E);
        sigma.at(1, 1) = parity;
        CHECK(sigma.bullet(sigma.transpose()).equal_on_check_basis(OpMatrix::identity(E, 2)));
    }
    SUBCASE("bullet is associative") {
        auto P4 = Algebra::functions_on_group(
            {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
        std::mt19937 rng(29);
        for (int trial = 0; trial < 8; ++trial) {
            size_t n = 1 + trial % 3;
            auto rand_op = [&]() {
                OpMatrix m(P4, n);
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j)
                        m.at(i, j) = LinOp::from_matrix(P4, random_square(rng, P4->field(), 4));
                return m;
            };
            OpMatrix F = rand_op(), G = rand_op(), H = rand_op();
            CHECK(F.bullet(G).bullet(H).equal_on_check_basis(F.bullet(G.bullet(H))));
        }
    }
}

TEST_CASE("transpose of operator matrices") {
    auto A = Algebra::functions_on_group(z2_table);
    OpMatrix F(A, 2);
    F.at(0, 1) = right_translation(A, 1);
    CHECK(F.transpose().at(1, 0) == F.at(0, 1));
    CHECK(F.transpose().transpose().equal_on_check_basis(F));
    OpMatrix D(A, 2);
    D.at(0, 0) = right_translation(A, 1);
    D.at(1, 1) = LinOp::identity(A);
    CHECK(D.transpose().equal_on_check_basis(D));
}

TEST_CASE("embedding M_n(A) by right multiplication") {
    auto A = Algebra::functions_on_group(z3_table, {"e_e", "e_g", "e_g2"});
    SUBCASE("embedding the identity matrix") {
        auto I = AlgMatrix::identity(A, 2);
        CHECK(OpMatrix::embed(I).equal_on_check_basis(OpMatrix::identity(A, 2)));
    }
    SUBCASE("diagonal matrices over a commutative algebra") {
        AlgMatrix p(A, 2), q(A, 2);
        p.at(0, 0) = A->basis_element(0);
        p.at(1, 1) = A->basis_element(1);
        q.at(0, 0) = A->basis_element(1) + A->basis_element(2);
        q.at(1, 1) = A->unit();
        CHECK(OpMatrix::embed(p).bullet(OpMatrix::embed(q))
                  .equal_on_check_basis(OpMatrix::embed(q * p)));
    }
    SUBCASE("size one flips the factor order") {
        auto U = upper_triangular();
        for (int trial = 0; trial < 10; ++trial) {
            AlgMatrix p(U, 1), q(U, 1);
            p.at(0, 0) = U->from_dense({Scalar(trial % 3 - 1), Scalar(trial % 2), Scalar(1)});
            q.at(0, 0) = U->from_dense({Scalar(1), Scalar(trial % 4 - 2), Scalar(trial % 3)});
            CHECK(OpMatrix::embed(p).bullet(OpMatrix::embed(q))
                      .equal_on_check_basis(OpMatrix::embed(q * p)));
        }
    }
    SUBCASE("general law: embed(p) . embed(q) = embed((q^T p^T)^T)") {
        auto U = upper_triangular();
        std::mt19937 rng(37);
        std::uniform_int_distribution<long> val(-2, 2);
        for (int trial = 0; trial < 10; ++trial) {
            size_t n = 2 + trial % 2;
            auto rand_mat = [&]() {
                AlgMatrix m(U, n);
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) {
                        std::vector<Scalar> coeffs{Scalar(val(rng)), Scalar(val(rng)),
                                                   Scalar(val(rng))};
                        m.at(i, j) = U->from_dense(coeffs);
                    }
                return m;
            };
            AlgMatrix p = rand_mat(), q = rand_mat();
            AlgMatrix flip = (q.transpose() * p.transpose()).transpose();
            CHECK(OpMatrix::embed(p).bullet(OpMatrix::embed(q))
                      .equal_on_check_basis(OpMatrix::embed(flip)));
        }
    }
}

TEST_CASE("algebra matrices and idempotency") {
    auto F = Field::rationals();
    auto z = F->zero();
    auto o = F->one();
    SUBCASE("identity matrix is idempotent") {
        auto A = Algebra::functions_on_group(z2_table);
        CHECK(AlgMatrix::identity(A, 3).is_idempotent());
    }
    SUBCASE("diag(t, 0) over Q[t]/(t^2 - t)") {
        // basis {1, t}, t*t = t
        std::vector<std::vector<std::vector<Scalar>>> c(
            2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>{z, z}));
        c[0][0] = {o, z};
        c[0][1] = {z, o};
        c[1][0] = {z, o};
        c[1][1] = {z, o};
        auto A = Algebra::finite(F, {"1", "t"}, c, {o, z});
        AlgMatrix pi(A, 2);
        pi.at(0, 0) = A->basis_element(1);
        CHECK(pi.is_idempotent());
        pi.at(0, 0) = A->unit() + A->basis_element(1);
        CHECK(!pi.is_idempotent());
    }
    SUBCASE("[[1,1],[0,0]] is idempotent over any algebra") {
        auto A = upper_triangular();
        AlgMatrix p(A, 2);
        p.at(0, 0) = A->unit();
        p.at(0, 1) = A->unit();
        CHECK(p.is_idempotent());
    }
    SUBCASE("row application multiplies entries from the right") {
        auto A = upper_triangular();
        AlgMatrix p(A, 2);
        p.at(0, 0) = A->basis_element(0);  // E11
        Element e12 = A->basis_element(1);
        auto out = p.apply_row({e12, A->zero()});
        CHECK(out[0].is_zero());  // E12 * E11 = 0
    }
}
