#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcblock/matpoly.hpp"

using namespace qcblock;

namespace {

MatPoly random_poly(const Field& F, u32 r, u32 c, u32 deg, std::mt19937_64& rng) {
    std::vector<Mat> coeffs;
    for (u32 k = 0; k <= deg; ++k) {
        Mat m(F, r, c);
        for (u32 i = 0; i < r; ++i)
            for (u32 j = 0; j < c; ++j) m.set(i, j, u32(rng() % F.q()));
        coeffs.push_back(m);
    }
    return MatPoly::from_coeffs(F, coeffs);
}

}  // namespace

TEST_CASE("1x1 coefficients behave like plain polynomials") {
    const Field& F2 = Field::get(2, 1);
    auto c = [&](u32 v) { return Mat::scalar(F2, 1, v); };
    MatPoly one_plus_x = MatPoly::from_coeffs(F2, {c(1), c(1)});
    MatPoly sq = one_plus_x * one_plus_x;
    CHECK(sq == MatPoly::from_coeffs(F2, {c(1), c(0), c(1)}));  // 1 + X^2

    MatPoly p = MatPoly::from_coeffs(F2, {c(1), c(0), c(1), c(1)});
    CHECK(p.mod_cyclic(2) == MatPoly::from_coeffs(F2, {c(0), c(1)}));
    CHECK(p.shift(2).mod_cyclic(2) == p.mod_cyclic(2).shift(2).mod_cyclic(2));
}

TEST_CASE("hand-checked product with non-commuting coefficients") {
    const Field& F2 = Field::get(2, 1);
    Mat I = Mat::identity(F2, 2);
    Mat C = Mat::from_rows(F2, {{0, 1}, {1, 0}});
    Mat D = Mat::from_rows(F2, {{1, 1}, {0, 1}});
    Mat CD = Mat::from_rows(F2, {{0, 1}, {1, 1}});
    Mat DC = Mat::from_rows(F2, {{1, 1}, {1, 0}});
    REQUIRE((C * D) == CD);
    REQUIRE((D * C) == DC);

    MatPoly P = MatPoly::from_coeffs(F2, {I, C});
    MatPoly Q = MatPoly::from_coeffs(F2, {I, D});
    CHECK((P * Q) == MatPoly::from_coeffs(F2, {I, C + D, CD}));
    CHECK((Q * P) == MatPoly::from_coeffs(F2, {I, C + D, DC}));
    CHECK((P * Q) != (Q * P));
}

TEST_CASE("coefficient access, shift, truncate, reciprocal") {
    const Field& F4 = Field::get(2, 2);
    Mat A = Mat::from_rows(F4, {{2, 0}, {0, 3}});
    Mat B = Mat::from_rows(F4, {{1, 1}, {0, 2}});
    MatPoly p = MatPoly::from_coeffs(F4, {A, B});
    CHECK(p.deg() == 1);
    CHECK(p.coeff(0) == A);
    CHECK(p.coeff(1) == B);
    CHECK(p.coeff(7).is_zero());

    MatPoly s = p.shift(2);
    CHECK(s.deg() == 3);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(2) == A);
    CHECK(s.truncate(3) == MatPoly::from_coeffs(F4, {Mat(F4, 2, 2), Mat(F4, 2, 2), A}));
    CHECK(p.truncate(1) == MatPoly::constant(A));

    // reverse inside window 3: [A, B, 0, 0] -> [0, 0, B, A]
    MatPoly r = p.reciprocal(3);
    CHECK(r.deg() == 3);
    CHECK(r.coeff(2) == B);
    CHECK(r.coeff(3) == A);
    CHECK(r.reciprocal(3) == p);
    CHECK_THROWS_AS(p.reciprocal(0), std::invalid_argument);

    MatPoly z(F4, 2, 2);
    CHECK(z.is_zero());
    CHECK(z.deg() == -1);
    CHECK((p + z) == p);
    CHECK((p - p).is_zero());
    CHECK((p * z).is_zero());

    MatPoly q = p;
    q.set_coeff(1, Mat(F4, 2, 2));
    CHECK(q.deg() == 0);  // trailing zero trimmed
}

TEST_CASE("evaluation at commuting matrix arguments") {
    const Field& F2 = Field::get(2, 1);
    Mat A = Mat::companion(F2, {1, 1, 1});  // order 3
    MatPoly lam = MatPoly::one_minus_x(A) * MatPoly::one_minus_x(A.pow(2));
    // factors vanish at X = A^{-1} and X = A^{-2}; all matrices here commute
    CHECK(lam.eval_right(A.pow(-1)).is_zero());
    CHECK(lam.eval_right(A.pow(-2)).is_zero());
    CHECK(lam.eval_left(A.pow(-1)).is_zero());
    CHECK(lam.eval_right(Mat::identity(F2, 2)).det() != 0);

    // left evaluation of a vector polynomial: sum B^i c_i
    const Field& F4 = Field::get(2, 2);
    Mat B = Mat::from_rows(F4, {{2, 1}, {0, 3}});
    Mat c0 = Mat::col_vector(F4, {1, 2});
    Mat c1 = Mat::col_vector(F4, {3, 0});
    MatPoly v = MatPoly::from_coeffs(F4, {c0, c1});
    CHECK(v.eval_left(B) == (c0 + B * c1));
}

TEST_CASE("ring identities on seeded samples") {
    std::mt19937_64 rng(0x5eed0004);
    const Field& F4 = Field::get(2, 2);
    for (int rep = 0; rep < 10; ++rep) {
        MatPoly P = random_poly(F4, 2, 2, 2 + u32(rng() % 3), rng);
        MatPoly Q = random_poly(F4, 2, 2, 2 + u32(rng() % 3), rng);
        MatPoly R = random_poly(F4, 2, 2, 2 + u32(rng() % 3), rng);
        CHECK(((P * Q) * R) == (P * (Q * R)));
        CHECK((P * (Q + R)) == (P * Q + P * R));
        CHECK(((P + Q) * R) == (P * R + Q * R));
        CHECK((P * Q).transpose_coeffs() == (Q.transpose_coeffs() * P.transpose_coeffs()));

        // folding is a ring morphism onto exponents mod m
        u32 m = 3;
        CHECK((P * Q).mod_cyclic(m) == (P.mod_cyclic(m) * Q.mod_cyclic(m)).mod_cyclic(m));
    }
}

TEST_CASE("series inverse") {
    std::mt19937_64 rng(0x5eed0005);
    const Field& F4 = Field::get(2, 2);
    int built = 0;
    while (built < 8) {
        MatPoly P = random_poly(F4, 2, 2, 3, rng);
        if (P.coeff(0).det() == 0) continue;
        ++built;
        MatPoly Q = P.series_inverse(6);
        MatPoly prod = (P * Q).truncate(6);
        CHECK(prod == MatPoly::constant(Mat::identity(F4, 2)));
    }
    Mat sing = Mat::from_rows(F4, {{1, 1}, {1, 1}});
    CHECK_THROWS_AS(MatPoly::constant(sing).series_inverse(3), std::domain_error);
}

TEST_CASE("shape mismatches are rejected") {
    const Field& F4 = Field::get(2, 2);
    const Field& F2 = Field::get(2, 1);
    MatPoly a(F4, 2, 2), b(F4, 2, 1), c(F2, 2, 2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(b * a, std::invalid_argument);
    CHECK_THROWS_AS(b.series_inverse(2), std::invalid_argument);
    CHECK_THROWS_AS(a.eval_right(Mat(F4, 3, 3)), std::invalid_argument);
    MatPoly ab = a * b;  // 2x2 times 2x1 is fine
    CHECK(ab.coeff_cols() == 1);
}
