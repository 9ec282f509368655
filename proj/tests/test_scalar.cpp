#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homint/scalar.hpp"

using namespace homint;

TEST_CASE("rational arithmetic is exact") {
    Scalar a(Rational(1, 3)), b(Rational(1, 6));
    CHECK(a + b == Scalar(Rational(1, 2)));
    CHECK(a - b == Scalar(Rational(1, 6)));
    CHECK(a * b == Scalar(Rational(1, 18)));
    CHECK(a / b == Scalar(2));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a / Scalar(0), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZeroError);
}

TEST_CASE("cyclotomic field instances") {
    SUBCASE("order 1 is plain rationals") {
        auto f = Field::cyclotomic(1);
        CHECK(f->order() == 1);
        CHECK(f->root() == f->one());
    }
    SUBCASE("zeta_4 squares to -1") {
        auto f = Field::cyclotomic(4);
        Scalar z = f->root();
        CHECK(z * z == f->from(-1));
        Scalar p4 = z * z * z * z;
        CHECK(p4 == f->one());
    }
    SUBCASE("zeta_3 relation (1+z)(1+z^2) = 1") {
        auto f = Field::cyclotomic(3);
        Scalar z = f->root();
        Scalar lhs = (f->one() + z) * (f->one() + z * z);
        CHECK(lhs == f->one());
    }
    SUBCASE("zeta_N^N = 1 and inversion") {
        for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
            auto f = Field::cyclotomic(n);
            Scalar z = f->root();
            Scalar p = f->one();
            for (unsigned i = 0; i < n; ++i) p = p * z;
            CHECK(p == f->one());
            Scalar w = f->one() + z;  // nonzero in every cyclotomic field with n > 2
            if (!w.is_zero()) CHECK(w * w.inverse() == f->one());
        }
    }
}

TEST_CASE("cyclotomic polynomial values") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Rational>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
}

TEST_CASE("rationals promote into cyclotomic fields") {
    auto f = Field::cyclotomic(3);
    Scalar z = f->root();
    Scalar mixed = Scalar(2) * z + Scalar(Rational(1, 2));
    CHECK(mixed == f->from(Rational(1, 2)) + f->from(2) * z);
    CHECK_THROWS_AS(Field::cyclotomic(3)->root() + Field::cyclotomic(4)->root(),
                    FieldMismatchError);
}

TEST_CASE("field axioms on randomized scalars") {
    std::mt19937 rng(20240911);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9), pick(0, 5);
    auto rand_scalar = [&](const FieldPtr& f) {
        std::vector<Rational> c(f->degree());
        for (auto& v : c) v = Rational(num(rng), den(rng));
        return Scalar(f, c);
    };
    for (const FieldPtr& f : {Field::rationals(), Field::cyclotomic(5), Field::cyclotomic(8)}) {
        for (int trial = 0; trial < 60; ++trial) {
            Scalar a = rand_scalar(f), b = rand_scalar(f), c = rand_scalar(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
        }
    }
}

TEST_CASE("scalar serialization round-trip") {
    CHECK(Scalar(Rational(-3, 4)).str() == "-3/4");
    CHECK(Scalar(5).str() == "5");
    CHECK(Scalar::parse("7/2") == Scalar(Rational(7, 2)));
    CHECK(Scalar::parse("-9") == Scalar(-9));
    auto f = Field::cyclotomic(4);
    Scalar z = f->root();
    Scalar s = f->from(Rational(1, 2)) - Scalar(3) * z;
    CHECK(s.str() == "[1/2,-3]@zeta4");
    CHECK(Scalar::parse(s.str()) == s);
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("[1,2,3]@zeta4"), ParseError);
}
