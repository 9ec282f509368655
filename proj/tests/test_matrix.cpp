#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homint/matrix.hpp"

using namespace homint;

namespace {

Matrix from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long v : r) row.push_back(Scalar(v));
        s.push_back(row);
    }
    return Matrix::from_rows(Field::rationals(), s, rows.empty() ? 0 : rows[0].size());
}

Matrix random_matrix(std::mt19937& rng, size_t rows, size_t cols) {
    std::uniform_int_distribution<long> val(-5, 5);
    Matrix m(Field::rationals(), rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar(val(rng));
    return m;
}

}  // namespace

TEST_CASE("rref on fixed cases") {
    SUBCASE("identity is its own rref") {
        auto rr = rref(Matrix::identity(Field::rationals(), 2));
        CHECK(rr.reduced == Matrix::identity(Field::rationals(), 2));
        CHECK(rr.pivots == std::vector<size_t>{0, 1});
    }
    SUBCASE("rank-1 symmetric case") {
        auto rr = rref(from_ints({{1, 1}, {1, 1}}));
        CHECK(rr.reduced == from_ints({{1, 1}, {0, 0}}));
        CHECK(rr.pivots == std::vector<size_t>{0});
    }
    SUBCASE("permuted diagonal reduces to identity") {
        auto rr = rref(from_ints({{0, 2}, {3, 0}}));
        CHECK(rr.reduced == Matrix::identity(Field::rationals(), 2));
        CHECK(rr.pivots == std::vector<size_t>{0, 1});
    }
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(rng, 1 + trial % 4, 1 + (trial / 2) % 5);
        auto rr = rref(m);
        CHECK(rref(rr.reduced).reduced == rr.reduced);
    }
}

TEST_CASE("kernel on fixed cases") {
    SUBCASE("zero map has full kernel") {
        CHECK(kernel(Matrix(Field::rationals(), 2, 2)).dim() == 2);
    }
    SUBCASE("identity has zero kernel") {
        CHECK(kernel(Matrix::identity(Field::rationals(), 2)).dim() == 0);
    }
    SUBCASE("one equation in two unknowns") {
        auto k = kernel(from_ints({{1, 1}}));
        CHECK(k.dim() == 1);
        CHECK(k.contains({Scalar(1), Scalar(-1)}));
        CHECK(!k.contains({Scalar(1), Scalar(1)}));
    }
}

TEST_CASE("rank-nullity holds exactly") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(rng, 1 + trial % 5, 1 + (trial / 3) % 5);
        auto k = kernel(m);
        CHECK(k.dim() + rank(m) == m.cols());
        for (size_t r = 0; r < k.dim(); ++r) {
            auto v = k.basis().row(r);
            auto image = m.apply(v);
            CHECK(std::all_of(image.begin(), image.end(),
                              [](const Scalar& s) { return s.is_zero(); }));
        }
    }
}

TEST_CASE("quotient map on fixed cases") {
    auto Q = Field::rationals();
    SUBCASE("quotient by zero subspace is the identity") {
        QuotientMap q(SubspacePresentation::zero(Q, 3));
        CHECK(q.target_dim() == 3);
        std::vector<Scalar> v{Scalar(1), Scalar(2), Scalar(3)};
        CHECK(q.coords(v) == v);
        CHECK(q.section(v) == v);
    }
    SUBCASE("quotient by span{(1,-1)} adds coordinates") {
        auto sub = SubspacePresentation::from_spanning(from_ints({{1, -1}}));
        QuotientMap q(sub);
        CHECK(q.target_dim() == 1);
        CHECK(q.coords({Scalar(3), Scalar(4)}) == std::vector<Scalar>{Scalar(7)});
        CHECK(q.coords({Scalar(1), Scalar(-1)}) == std::vector<Scalar>{Scalar(0)});
    }
    SUBCASE("quotient by the full space is zero-dimensional") {
        auto sub = SubspacePresentation::from_spanning(Matrix::identity(Q, 2));
        QuotientMap q(sub);
        CHECK(q.target_dim() == 0);
        CHECK(q.coords({Scalar(5), Scalar(-2)}).empty());
    }
}

TEST_CASE("quotient kills the subspace and sections split it") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        size_t ambient = 2 + trial % 4;
        Matrix span = random_matrix(rng, 1 + trial % 3, ambient);
        auto sub = SubspacePresentation::from_spanning(span);
        QuotientMap q(sub);
        CHECK(sub.dim() + q.target_dim() == ambient);
        for (size_t r = 0; r < span.rows(); ++r) {
            auto c = q.coords(span.row(r));
            CHECK(std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); }));
        }
        // coords(section(x)) = x for arbitrary quotient coordinates
        std::uniform_int_distribution<long> val(-4, 4);
        std::vector<Scalar> x(q.target_dim(), Scalar(0));
        for (auto& v : x) v = Scalar(val(rng));
        CHECK(q.coords(q.section(x)) == x);
    }
}
