#include <catch2/catch_amalgamated.hpp>

#include "symtor/linalg.hpp"

using namespace symtor;

TEST_CASE("rref computes rank and pivots") {
    QMat m(3, 4);
    m << 1, 2, 0, 3,
         2, 4, 1, 7,
         1, 2, 1, 4;
    std::vector<int> pivots;
    int rank = rref_inplace(m, &pivots);
    REQUIRE(rank == 2);
    REQUIRE(pivots == std::vector<int>{0, 2});
}

TEST_CASE("kernel vectors annihilate the matrix") {
    QMat m(2, 4);
    m << 1, 0, 2, -1,
         0, 1, 1, 1;
    QMat k = kernel(m);
    REQUIRE(k.cols() == 2);
    REQUIRE(QMat(m * k).isZero(0));
}

TEST_CASE("solve finds exact rational solutions") {
    QMat a(2, 2);
    a << Rational(1, 2), Rational(3),
         Rational(-1), Rational(2, 5);
    QVec b(2);
    b << Rational(7, 6), Rational(1);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    REQUIRE(QVec(a * *x - b).isZero(0));
}

TEST_CASE("solve detects inconsistency") {
    QMat a(2, 1);
    a << 1, 2;
    QVec b(2);
    b << 1, 3;
    REQUIRE(!solve(a, b).has_value());
}

TEST_CASE("span comparisons") {
    QMat a(3, 2), b(3, 2);
    a << 1, 0, 0, 1, 0, 0;
    b << 1, 1, 1, -1, 0, 0;
    REQUIRE(same_span(a, b));
    QVec v(3);
    v << 2, 3, 0;
    REQUIRE(in_span(a, v));
    v << 0, 0, 1;
    REQUIRE(!in_span(a, v));
}

TEST_CASE("independent columns greedy selection") {
    QMat cols(2, 4);
    cols << 1, 2, 0, 1,
            1, 2, 1, 0;
    auto idx = independent_columns(cols);
    REQUIRE(idx == std::vector<int>{0, 2});
}

TEST_CASE("rational pow handles negative exponents") {
    REQUIRE(rat_pow(Rational(2), Integer(-3)) == Rational(1, 8));
    REQUIRE(rat_pow(Rational(-1), Integer(7)) == Rational(-1));
    REQUIRE(rat_pow(Rational(5, 3), Integer(0)) == Rational(1));
}
