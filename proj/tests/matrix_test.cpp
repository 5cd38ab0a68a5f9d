#include <mutlab/errors.hpp>
#include <mutlab/matrix.hpp>

#include <doctest.h>

#include <random>
#include <vector>

using namespace mutlab;

TEST_CASE("identity and element access are 1-based") {
    IntMatrix m = IntMatrix::identity(3);
    CHECK(m.size() == 3);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(1, 2) == 0);
    CHECK(m.at(3, 3) == 1);
}

TEST_CASE("from_rows rejects ragged input") {
    CHECK_THROWS_AS(IntMatrix::from_rows({{Int(1), Int(2)}, {Int(3)}}), NotSquare);
    IntMatrix m = IntMatrix::of({{1, 2}, {3, 4}});
    CHECK(m.at(2, 1) == 3);
}

TEST_CASE("row and column extraction") {
    IntMatrix m = IntMatrix::of({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(m.column(2) == std::vector<Int>{2, 5, 8});
    CHECK(m.row(3) == std::vector<Int>{7, 8, 9});
}

TEST_CASE("multiplication and transpose") {
    IntMatrix a = IntMatrix::of({{1, 2}, {3, 4}});
    IntMatrix b = IntMatrix::of({{0, 1}, {1, 0}});
    CHECK(a * b == IntMatrix::of({{2, 1}, {4, 3}}));
    CHECK(transpose(a) == IntMatrix::of({{1, 3}, {2, 4}}));
    CHECK(a * IntMatrix::identity(2) == a);
}

TEST_CASE("determinant: fixed values") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix::of({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(IntMatrix::of({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    CHECK(determinant(IntMatrix::of({{35, 3, 6}, {0, -1, 0}, {-6, 0, -1}})) == -1);
}

TEST_CASE("determinant is multiplicative (randomized)") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a(3), b(3);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                a.at(i, j) = d(rng);
                b.at(i, j) = d(rng);
            }
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("unimodular_inverse inverts and rejects") {
    IntMatrix g = IntMatrix::of({{35, 3, 6}, {0, -1, 0}, {-6, 0, -1}});
    IntMatrix inv = unimodular_inverse(g);
    CHECK(g * inv == IntMatrix::identity(3));
    CHECK(inv * g == IntMatrix::identity(3));
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix::of({{2, 0}, {0, 1}})), NotUnimodular);
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix::of({{1, 1}, {1, 1}})), NotUnimodular);
}

TEST_CASE("bilinear_value evaluates v^T M v") {
    IntMatrix a = IntMatrix::of({{2, 3, 6}, {3, 2, 3}, {6, 3, 2}});
    CHECK(bilinear_value(a, {1, 0, 0}) == 2);
    CHECK(bilinear_value(a, {35, 0, -6}) == 2);  // a root: v^T A v = 2
    CHECK(bilinear_value(a, {1, 1, 1}) == 30);
}

TEST_CASE("max_abs_entry") {
    CHECK(max_abs_entry(IntMatrix::of({{0, -7}, {7, 0}})) == 7);
    CHECK(max_abs_entry(IntMatrix::identity(2)) == 1);
}

TEST_CASE("to_string renderings") {
    CHECK(to_string(IntMatrix::of({{0, -3}, {3, 0}})) == "[[0,-3],[3,0]]");
    CHECK(to_string(std::vector<Int>{1, 3, 6}) == "(1,3,6)");
}

TEST_CASE("parse_decimal round-trips through to_decimal") {
    Int big = Int("123456789012345678901234567890");
    CHECK(parse_decimal(to_decimal(big)) == big);
    CHECK(parse_decimal("-42") == -42);
    CHECK_THROWS_AS(parse_decimal("12x"), ParseError);
    CHECK_THROWS_AS(parse_decimal(""), ParseError);
}
