#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcblock/linalg.hpp"

using namespace qcblock;

namespace {

Mat random_mat(const Field& F, u32 r, u32 c, std::mt19937_64& rng) {
    Mat m(F, r, c);
    for (u32 i = 0; i < r; ++i)
        for (u32 j = 0; j < c; ++j) m.set(i, j, u32(rng() % F.q()));
    return m;
}

Mat random_invertible(const Field& F, u32 n, std::mt19937_64& rng) {
    for (;;) {
        Mat m = random_mat(F, n, n, rng);
        if (m.det() != 0) return m;
    }
}

}  // namespace

TEST_CASE("hand-checked arithmetic over F5") {
    const Field& F5 = Field::get(5, 1);
    Mat A = Mat::from_rows(F5, {{1, 2}, {3, 4}});
    Mat B = Mat::from_rows(F5, {{2, 1}, {1, 3}});

    CHECK(A.det() == 3);  // 4 - 6 = -2
    CHECK(B.det() == 0);  // 6 - 1 = 5
    CHECK((A * B) == Mat::from_rows(F5, {{4, 2}, {0, 0}}));
    CHECK(A.inverse() == Mat::from_rows(F5, {{3, 1}, {4, 2}}));
    CHECK((A * A.inverse()).is_identity());
    CHECK((A + (-A)).is_zero());
    CHECK((A - A).is_zero());
    CHECK(A.scaled(2) == Mat::from_rows(F5, {{2, 4}, {1, 3}}));
    CHECK_THROWS_AS(B.inverse(), std::domain_error);

    const Field& F7 = Field::get(7, 1);
    Mat C = Mat::from_rows(F7, {{1, 2, 3}, {4, 5, 6}, {0, 1, 3}});
    CHECK(C.det() == 4);  // integer det -3
}

TEST_CASE("hand-checked arithmetic over F4") {
    const Field& F4 = Field::get(2, 2);  // w = 2, w^2 = 3
    Mat A = Mat::from_rows(F4, {{2, 1}, {0, 3}});
    CHECK((A * A) == Mat::from_rows(F4, {{3, 1}, {0, 2}}));

    // companion matrix of x^2 + x + 1 acts as multiplication by w: order 3
    Mat M = Mat::companion(Field::get(2, 1), {1, 1, 1});
    CHECK(M == Mat::from_rows(Field::get(2, 1), {{0, 1}, {1, 1}}));
    CHECK(M.pow(3).is_identity());
    CHECK_FALSE(M.pow(1).is_identity());
    CHECK_FALSE(M.pow(2).is_identity());
}

TEST_CASE("rref, rank, nullspace: hand example over F5") {
    const Field& F5 = Field::get(5, 1);
    Mat A = Mat::from_rows(F5, {{0, 2, 4}, {1, 1, 1}, {2, 2, 2}});
    MatRref rr = A.rref();
    CHECK(rr.rank == 2);
    CHECK(rr.pivot_cols == std::vector<u32>{0, 1});
    CHECK(rr.mat == Mat::from_rows(F5, {{1, 0, 4}, {0, 1, 2}, {0, 0, 0}}));

    Mat N = A.nullspace();
    CHECK(N.rows() == 1);
    CHECK(N.row(0) == std::vector<u32>{1, 3, 1});
    CHECK(A.mul_vec(N.row(0)) == std::vector<u32>(3, 0));

    CHECK(A.canonical_rowspace() == Mat::from_rows(F5, {{1, 0, 4}, {0, 1, 2}}));
}

TEST_CASE("algebraic identities on seeded samples") {
    std::mt19937_64 rng(0x5eed0001);
    for (const Field* Fp : {&Field::get(2, 2), &Field::get(5, 1), &Field::get(2, 3)}) {
        const Field& F = *Fp;
        for (int rep = 0; rep < 12; ++rep) {
            Mat A = random_mat(F, 3, 3, rng);
            Mat B = random_mat(F, 3, 3, rng);
            Mat C = random_mat(F, 3, 3, rng);
            CHECK(((A * B) * C) == (A * (B * C)));
            CHECK((A * (B + C)) == (A * B + A * C));
            CHECK((A * B).transpose() == (B.transpose() * A.transpose()));
            CHECK(F.mul(A.det(), B.det()) == (A * B).det());
            CHECK(A.det() == A.transpose().det());
            CHECK(A.rank() == A.transpose().rank());

            Mat U = random_invertible(F, 3, rng);
            CHECK((U * U.inverse()).is_identity());
            CHECK(U.pow(-2) == (U.inverse() * U.inverse()));
            CHECK(U.pow(0).is_identity());
            CHECK(U.pow(5) == (U * U * U * U * U));
        }
    }
}

TEST_CASE("rank-nullity and solve round trips") {
    std::mt19937_64 rng(0x5eed0002);
    const Field& F = Field::get(2, 2);
    for (int rep = 0; rep < 20; ++rep) {
        u32 r = 2 + u32(rng() % 3), c = 2 + u32(rng() % 4);
        Mat A = random_mat(F, r, c, rng);
        Mat N = A.nullspace();
        CHECK(A.rank() + N.rows() == c);
        if (N.rows()) CHECK(N.rank() == N.rows());
        for (u32 i = 0; i < N.rows(); ++i)
            CHECK(A.mul_vec(N.row(i)) == std::vector<u32>(r, 0));

        std::vector<u32> x(c);
        for (auto& v : x) v = u32(rng() % F.q());
        std::vector<u32> b = A.mul_vec(x);
        auto sol = A.solve(b);
        REQUIRE(sol.has_value());
        CHECK(A.mul_vec(*sol) == b);

        std::vector<u32> b2(r);
        for (auto& v : b2) v = u32(rng() % F.q());
        auto sol2 = A.solve(b2);
        if (sol2) {
            CHECK(A.mul_vec(*sol2) == b2);
        } else {
            Mat aug = Mat::hstack({A, Mat::col_vector(F, b2)});
            CHECK(aug.rank() == A.rank() + 1);
        }
    }
}

TEST_CASE("canonical row space is invariant under row operations") {
    std::mt19937_64 rng(0x5eed0003);
    const Field& F = Field::get(5, 1);
    for (int rep = 0; rep < 15; ++rep) {
        Mat A = random_mat(F, 3, 5, rng);
        Mat U = random_invertible(F, 3, rng);
        CHECK((U * A).canonical_rowspace() == A.canonical_rowspace());
    }
    Mat Z(F, 2, 4);
    CHECK(Z.canonical_rowspace().rows() == 0);
}

TEST_CASE("stacking, blocks, and vector helpers") {
    const Field& F4 = Field::get(2, 2);
    Mat A = Mat::from_rows(F4, {{1, 2}, {3, 0}});
    Mat B = Mat::from_rows(F4, {{0, 1}, {2, 2}});

    Mat H = Mat::hstack({A, B});
    CHECK(H.cols() == 4);
    CHECK(H.col_range(0, 2) == A);
    CHECK(H.col_range(2, 2) == B);

    Mat V = Mat::vstack({A, B});
    CHECK(V.rows() == 4);
    CHECK(V.row_range(0, 2) == A);
    CHECK(V.row_range(2, 2) == B);
    CHECK(V.block(1, 1, 2, 1) == Mat::from_rows(F4, {{0}, {1}}));

    // x A as a row vector equals row_vector(x) * A
    std::vector<u32> x{2, 3};
    CHECK(A.vec_mul(x) == (Mat::row_vector(F4, x) * A).row(0));
    CHECK(A.mul_vec(x) == (A * Mat::col_vector(F4, x)).col(0));

    CHECK(vec_weight({0, 1, 0, 3}) == 2);
    CHECK(vec_add(F4, {1, 2}, {3, 2}) == std::vector<u32>{2, 0});
    CHECK(vec_sub(F4, {1, 2}, {3, 2}) == std::vector<u32>{2, 0});
    CHECK(vec_scale(F4, 2, {1, 2, 3}) == std::vector<u32>{2, 3, 1});
}

TEST_CASE("shape and field mismatches are rejected") {
    const Field& F4 = Field::get(2, 2);
    const Field& F5 = Field::get(5, 1);
    Mat A(F4, 2, 3);
    Mat B(F5, 2, 3);
    Mat C(F4, 3, 2);
    CHECK_THROWS_AS(A + B, std::invalid_argument);
    CHECK_THROWS_AS(A + C, std::invalid_argument);
    CHECK_THROWS_AS(A * A, std::invalid_argument);
    CHECK_THROWS_AS(A.det(), std::invalid_argument);
    CHECK_THROWS_AS(A.pow(2), std::invalid_argument);
    CHECK_THROWS_AS(A.mul_vec({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Mat::from_rows(F4, {{1, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(Mat::companion(F4, {1, 2}), std::invalid_argument);
}
