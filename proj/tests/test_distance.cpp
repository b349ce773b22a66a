#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "qcblock/distance.hpp"
#include "qcblock/qbch.hpp"

using namespace qcblock;

namespace {

Mat reference_root_25() {
    const Field& F25 = Field::get(5, 2);
    u32 w = F25.generator();
    std::initializer_list<int> e{9, 4, 22, 11, 11, 15, 2, 19, 0};
    Mat A(F25, 3, 3);
    u32 i = 0;
    for (int x : e) { A.set(i / 3, i % 3, F25.pow(w, x)); ++i; }
    return A;
}

QbchCode build_21_9() {
    const Field& F5 = Field::get(5, 1);
    return qbch_build(F5, 7, 3, reference_root_25());
}

QbchCode build_14_2() {
    const Field& F2 = Field::get(2, 1);
    const Field& F8 = Field::get(2, 3);
    u32 x = F8.generator();
    Mat A(F8, 2, 2);
    A.set(0, 0, x);
    A.set(1, 1, F8.pow(x, 3));
    return qbch_build(F2, 7, 5, A);
}

LinearCode hamming_7_4() {
    const Field& F2 = Field::get(2, 1);
    MatPoly g(F2, 1, 1);
    Mat one = Mat::identity(F2, 1);
    g.set_coeff(0, one);
    g.set_coeff(1, one);
    g.set_coeff(3, one);
    return code_from_generator(g, 7);
}

LinearCode random_code(const Field& F, u32 n, u32 k, std::mt19937_64& rng) {
    Mat rows(F, k, n);
    for (u32 i = 0; i < k; ++i)
        for (u32 j = 0; j < n; ++j) rows.set(i, j, u32(rng() % F.q()));
    return LinearCode::from_rows(F, rows);
}

}  // namespace

TEST_CASE("repetition and tiny codes") {
    const Field& F3 = Field::get(3, 1);
    Mat rep(F3, 1, 5);
    for (u32 j = 0; j < 5; ++j) rep.set(0, j, 1);
    LinearCode C = LinearCode::from_rows(F3, rep);
    C.set_block_len(1);
    DistanceReport r = min_distance_enum(C);
    CHECK(r.exact);
    CHECK(r.upper == 5);
    CHECK(r.block.value() == 5);
    CHECK(r.words == 1);  // one scalar class
    CHECK(vec_weight(r.witness) == 5);
    CHECK(C.contains(r.witness));

    C.set_block_len(5);
    DistanceReport r1 = min_distance_enum(C);
    CHECK(r1.block.value() == 1);

    const Field& F2 = Field::get(2, 1);
    LinearCode full = LinearCode::full_code(F2, 4);
    CHECK(min_distance_enum(full).upper == 1);

    LinearCode zero = LinearCode::zero_code(F2, 6);
    DistanceReport rz = min_distance_enum(zero);
    CHECK(!rz.found);
    CHECK(rz.exact);
    CHECK(rz.lower == 7);
    DistanceReport rzl = min_distance_low_weight(zero, 3);
    CHECK(!rzl.found);
    CHECK(rzl.lower == 7);
}

TEST_CASE("hamming code distance") {
    LinearCode C = hamming_7_4();
    DistanceReport r = min_distance_enum(C);
    CHECK(r.exact);
    CHECK(r.upper == 3);
    CHECK(r.words == 15);
    CHECK(vec_weight(r.witness) == 3);
    CHECK(C.contains(r.witness));

    DistanceReport rl = min_distance_low_weight(C, 3);
    CHECK(rl.exact);
    CHECK(rl.upper == 3);

    // No codeword of weight <= 2, so only the bound is known.
    DistanceReport r2 = min_distance_low_weight(C, 2);
    CHECK(!r2.exact);
    CHECK(r2.lower == 3);
    CHECK(r2.upper >= 3);
    CHECK(C.contains(r2.witness));
}

TEST_CASE("quasi-BCH [21,9] over F5") {
    QbchCode Q = build_21_9();
    DistanceReport r = min_distance_enum(Q.code);
    CHECK(r.exact);
    CHECK(r.upper == 7);
    CHECK(r.block.value() == 4);
    CHECK(r.words == 488281);
    CHECK(vec_weight(r.witness) == 7);
    CHECK(Q.code.contains(r.witness));

    // Exhaustive bounded-weight search agrees.
    DistanceReport rl = min_distance_low_weight(Q.code, 9);
    CHECK(rl.exact);
    CHECK(rl.upper == 7);
    CHECK(rl.words == 488281);

    DistanceReport rb = min_distance_low_weight(Q.code, 4);
    CHECK(!rb.exact);
    CHECK(rb.lower == 5);
    CHECK(rb.upper >= 7);

    CHECK(block_distance_at_least(Q.code, 3, 3));
    CHECK(block_distance_at_least(Q.code, 3, 4));
    CHECK(!block_distance_at_least(Q.code, 3, 5));
}

TEST_CASE("quasi-BCH [14,2] over F2") {
    QbchCode Q = build_14_2();
    DistanceReport r = min_distance_enum(Q.code);
    CHECK(r.exact);
    CHECK(r.upper == 7);
    CHECK(r.block.value() == 7);
    CHECK(r.words == 3);
    CHECK(block_distance_at_least(Q.code, 2, 5));
    CHECK(block_distance_at_least(Q.code, 2, 7));
    CHECK(!block_distance_at_least(Q.code, 2, 8));
}

TEST_CASE("quasi-BCH [63,33] over F2 via bounded weight") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    Mat A = companion_primitive_root(F4, 21, 3);
    QbchCode Q = qbch_build(F2, 21, 6, A);
    REQUIRE(Q.code.n() == 63);
    REQUIRE(Q.code.k() == 33);
    DistanceReport r = min_distance_low_weight(Q.code, 7);
    CHECK(r.exact);
    CHECK(r.upper == 7);
    CHECK(r.words == 5663889);
    CHECK(vec_weight(r.witness) == 7);
    CHECK(Q.code.contains(r.witness));
    CHECK(block_distance_at_least(Q.code, 3, 6));
}

TEST_CASE("planted low-weight word is found") {
    const Field& F2 = Field::get(2, 1);
    Mat rows(F2, 2, 7);
    rows.set(0, 0, 1);
    rows.set(0, 1, 1);
    for (u32 j = 2; j < 7; ++j) rows.set(1, j, 1);
    LinearCode C = LinearCode::from_rows(F2, rows);
    DistanceReport r = min_distance_low_weight(C, 2);
    CHECK(r.exact);
    CHECK(r.upper == 2);
    CHECK(vec_weight(r.witness) == 2);
    CHECK(C.contains(r.witness));
}

TEST_CASE("enumeration and bounded-weight search agree on random codes") {
    std::mt19937_64 rng(0x5eed0040);
    struct Shape { u32 p, d, n, k, l; };
    for (Shape s : {Shape{2, 1, 12, 5, 4}, Shape{3, 1, 10, 4, 2},
                    Shape{2, 2, 8, 3, 2}, Shape{5, 1, 9, 3, 3}}) {
        const Field& F = Field::get(s.p, s.d);
        for (u32 rep = 0; rep < 4; ++rep) {
            LinearCode C = random_code(F, s.n, s.k, rng);
            if (C.k() == 0) continue;
            C.set_block_len(s.l);
            DistanceReport re = min_distance_enum(C);
            DistanceReport rl = min_distance_low_weight(C, C.k());
            CHECK(re.exact);
            CHECK(rl.exact);
            CHECK(re.upper == rl.upper);
            CHECK(re.words == rl.words);
            CHECK(C.contains(re.witness));
            CHECK(vec_weight(re.witness) == re.upper);
            CHECK(C.contains(rl.witness));
            CHECK(vec_weight(rl.witness) == rl.upper);
            // Block and Hamming distances bracket each other.
            u32 bd = re.block.value();
            CHECK(bd <= re.upper);
            CHECK(re.upper <= s.l * bd);
            CHECK(block_distance_at_least(C, s.l, bd));
            CHECK(!block_distance_at_least(C, s.l, bd + 1));
            // Same row space in a different presentation, same report.
            Mat scram(F, 2 * C.k(), s.n);
            for (u32 i = 0; i < C.k(); ++i) {
                scram.set_row(i, C.generator().row(C.k() - 1 - i));
                std::vector<u32> mix(s.n, 0);
                for (u32 t = 0; t < C.k(); ++t) {
                    u32 c = u32(rng() % F.q());
                    mix = vec_add(F, mix, vec_scale(F, c, C.generator().row(t)));
                }
                scram.set_row(C.k() + i, mix);
            }
            LinearCode C2 = LinearCode::from_rows(F, scram);
            REQUIRE(C2 == C);
            C2.set_block_len(s.l);
            DistanceReport r2 = min_distance_enum(C2);
            CHECK(r2.upper == re.upper);
            CHECK(r2.block.value() == bd);
        }
    }
}

TEST_CASE("block distance equals distance of the folded code") {
    const Field& F2 = Field::get(2, 1);
    Mat rows(F2, 2, 6);
    u32 r0[6] = {1, 1, 0, 1, 0, 1};
    u32 r1[6] = {0, 1, 1, 0, 1, 1};
    for (u32 j = 0; j < 6; ++j) {
        rows.set(0, j, r0[j]);
        rows.set(1, j, r1[j]);
    }
    LinearCode C = LinearCode::from_rows(F2, rows);
    C.set_block_len(2);
    DistanceReport r = min_distance_enum(C);
    FoldingSpec fold(F2, 2);
    u32 best = 7;
    for (u32 msg = 1; msg < 4; ++msg) {
        std::vector<u32> m{msg & 1, (msg >> 1) & 1};
        std::vector<u32> folded = fold.fold(C.encode(m));
        best = std::min(best, vec_weight(folded));
    }
    CHECK(r.block.value() == best);
}

TEST_CASE("thread partition is deterministic") {
    QbchCode Q = build_21_9();
    DistanceReport a = min_distance_enum(Q.code, 1);
    DistanceReport b = min_distance_enum(Q.code, 3);
    CHECK(a.upper == b.upper);
    CHECK(a.block.value() == b.block.value());
    CHECK(a.witness == b.witness);
    CHECK(a.words == b.words);
}

TEST_CASE("budgets and argument errors") {
    QbchCode Q = build_21_9();
    CHECK_THROWS_AS(min_distance_enum(Q.code, 1, 1000), std::invalid_argument);
    CHECK_THROWS_AS(min_distance_low_weight(Q.code, 9, 1000), std::invalid_argument);
    CHECK_THROWS_AS(min_distance_low_weight(Q.code, 0), std::invalid_argument);
    CHECK_THROWS_AS(block_distance_at_least(Q.code, 3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(block_distance_at_least(Q.code, 5, 2), std::invalid_argument);
}
