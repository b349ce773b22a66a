#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "qcblock/evalcode.hpp"
#include "qcblock/qbch.hpp"

using namespace qcblock;

namespace {

// Root of order 63 over F4 whose projected evaluation code sets the record.
Mat record_root() {
    const Field& F4 = Field::get(2, 2);
    u32 w = 2;
    u32 w2 = F4.mul(w, w);
    Mat A(F4, 3, 3);
    u32 e[9] = {0, w, 0, w, w2, w2, 1, w2, 1};
    for (u32 i = 0; i < 3; ++i)
        for (u32 j = 0; j < 3; ++j) A.set(i, j, e[3 * i + j]);
    return A;
}

ProjectionSpec record_proj() {
    return ProjectionSpec::entries({{1, 0}, {0, 1}, {1, 2}});
}

Mat pi_matrix() {
    const Field& F4 = Field::get(2, 2);
    Mat Pi(F4, 3, 3);
    u32 pe[9] = {1, 3, 2, 3, 2, 1, 1, 1, 1};
    for (u32 i = 0; i < 9; ++i) Pi.set(i / 3, i % 3, pe[i]);
    return Pi;
}

Mat small_root() {
    const Field& F2 = Field::get(2, 1);
    return Mat::companion(F2, {1, 1, 1});  // order 3, minimal polynomial X^2+X+1
}

}  // namespace

TEST_CASE("projector variants") {
    Mat A = record_root();
    const Field& F4 = A.field();

    Projector psi(A, ProjectionSpec::psi());
    CHECK(psi.kernel_dim() == 0);
    CHECK(psi.apply(Mat::identity(F4, 3)) == std::vector<u32>{1, 0, 0});
    CHECK(psi.apply(A) == std::vector<u32>{0, 1, 0});
    CHECK(psi.psi_coords(A.pow(5)) == std::vector<u32>{2, 1, 3});

    Projector row1(A, ProjectionSpec::row(1));
    CHECK(row1.kernel_dim() == 0);
    CHECK(row1.apply(A) == A.row(1));
    Projector col2(A, ProjectionSpec::col(2));
    CHECK(col2.kernel_dim() == 0);
    CHECK(col2.apply(A.pow(7)) == A.pow(7).col(2));

    Projector coords(A, record_proj());
    CHECK(coords.kernel_dim() == 1);
    Mat B = A.pow(9);
    CHECK(coords.apply(B) == std::vector<u32>{B.at(1, 0), B.at(0, 1), B.at(1, 2)});

    CHECK(pi_matrix().rank() == 2);
    Projector pp(A, ProjectionSpec::psi_pi(pi_matrix()));
    CHECK(pp.kernel_dim() == 1);

    // A nonzero singular matrix cannot lie in the field F_q[A].
    Mat E(F4, 3, 3);
    E.set(0, 0, 1);
    CHECK_THROWS_AS(psi.psi_coords(E), std::invalid_argument);

    CHECK_THROWS_AS(Projector(A, ProjectionSpec::row(3)), std::invalid_argument);
    CHECK_THROWS_AS(Projector(A, ProjectionSpec::entries({{0, 0}, {1, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(Projector(A, ProjectionSpec::entries({{0, 0}, {1, 1}, {0, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(Projector(A, ProjectionSpec::psi_pi(Mat::identity(F4, 2))),
                    std::invalid_argument);
}

TEST_CASE("minimal polynomial of a matrix") {
    Mat A = record_root();
    Poly mp = matrix_minimal_polynomial(A);
    CHECK(mp.degree() == 3);
    CHECK(mp.is_irreducible());

    Poly small = matrix_minimal_polynomial(small_root());
    CHECK(small.coeffs() == std::vector<u32>{1, 1, 1});

    const Field& F2 = Field::get(2, 1);
    Poly ident = matrix_minimal_polynomial(Mat::identity(F2, 2));
    CHECK(ident.coeffs() == std::vector<u32>{1, 1});  // X - 1

    // Split diagonal: minimal polynomial factors, F_q[A] is not a field.
    const Field& F8 = Field::get(2, 3);
    u32 x = F8.generator();
    Mat D(F8, 2, 2);
    D.set(0, 0, x);
    D.set(1, 1, F8.pow(x, 3));
    Poly dm = matrix_minimal_polynomial(D);
    CHECK(dm.degree() == 2);
    CHECK(!dm.is_irreducible());
}

TEST_CASE("record code and shortened family") {
    const Field& F4 = Field::get(2, 2);
    EvalSpec spec{&F4, 3, record_root(), 4, 0, record_proj()};
    EvalCode C = eval_code_build(spec);
    CHECK(C.code.n() == 189);
    CHECK(C.code.k() == 11);
    CHECK(C.m == 63);
    CHECK(C.points == 63);
    CHECK(C.full_points);
    CHECK(C.code.is_quasi_cyclic(3));
    DistanceReport r = min_distance_enum(C.code);
    CHECK(r.exact);
    CHECK(r.upper == 125);
    CHECK(r.block.value() == 53);

    EvalCode S62 = eval_code_shortened(spec, 62);
    CHECK(S62.code.n() == 186);
    CHECK(S62.code.k() == 11);
    CHECK(!S62.full_points);
    CHECK(min_distance_enum(S62.code).upper == 122);

    EvalCode S59 = eval_code_shortened(spec, 59);
    CHECK(S59.code.n() == 177);
    CHECK(S59.code.k() == 11);

    // Same spec with every point is the full build.
    EvalCode Sm = eval_code_shortened(spec, 63);
    CHECK(Sm.code == C.code);
    CHECK(Sm.full_points);

    CHECK_THROWS_AS(eval_code_shortened(spec, 3), std::invalid_argument);  // k > points
    CHECK_THROWS_AS(eval_code_shortened(spec, 64), std::invalid_argument);
    EvalSpec bad = spec;
    bad.k = 64;
    CHECK_THROWS_AS(eval_code_build(bad), std::invalid_argument);
}

TEST_CASE("small psi family meets the MDS-like bound") {
    const Field& F2 = Field::get(2, 1);
    Mat A = small_root();
    struct Expect { u32 k, n, dim, d, block; };
    for (Expect e : {Expect{1, 6, 2, 3, 3}, Expect{2, 6, 4, 2, 2}, Expect{3, 6, 6, 1, 1}}) {
        EvalSpec sp{&F2, 2, A, e.k, 0, ProjectionSpec::psi()};
        EvalCode C = eval_code_build(sp);
        CHECK(C.code.n() == e.n);
        CHECK(C.code.k() == e.dim);
        CHECK(C.code.is_quasi_cyclic(2));
        DistanceReport r = min_distance_enum(C.code);
        CHECK(r.upper == e.d);
        CHECK(r.block.value() == e.block);
        CHECK(mds_like_bound_check(C));
    }
    for (ProjectionSpec p : {ProjectionSpec::row(0), ProjectionSpec::row(1),
                             ProjectionSpec::col(0), ProjectionSpec::col(1)}) {
        EvalSpec sp{&F2, 2, A, 2, 0, p};
        EvalCode C = eval_code_build(sp);
        CHECK(C.code.k() == 4);  // injective projection keeps dimension kl
        CHECK(mds_like_bound_check(C));
    }
    EvalSpec sp{&F2, 2, A, 2, 0, ProjectionSpec::entries({{0, 0}, {1, 1}})};
    EvalCode C = eval_code_build(sp);
    CHECK_THROWS_AS(mds_like_bound_check(C), std::invalid_argument);
}

TEST_CASE("projection through a singular right factor") {
    const Field& F4 = Field::get(2, 2);
    EvalSpec base{&F4, 3, record_root(), 1, 0, ProjectionSpec::psi_pi(pi_matrix())};
    struct Expect { u32 k, dim, d, block; };
    for (Expect e : {Expect{1, 2, 126, 63}, Expect{2, 5, 126, 59}, Expect{3, 8, 125, 55}}) {
        EvalSpec sp = base;
        sp.k = e.k;
        EvalCode C = eval_code_build(sp);
        CHECK(C.code.n() == 189);
        CHECK(C.code.k() == e.dim);
        CHECK(C.code.is_quasi_cyclic(3));
        DistanceReport r = min_distance_enum(C.code);
        CHECK(r.upper == e.d);
        CHECK(r.block.value() == e.block);
        // Bound from the projection kernel: dim >= kl - points * ker.
        Projector pr(sp.root, sp.proj);
        u64 loss = u64(C.points) * pr.kernel_dim();
        CHECK(u64(C.code.k()) + loss >= u64(sp.k) * sp.l);
    }
}

TEST_CASE("encoding matches the generator rows") {
    const Field& F2 = Field::get(2, 1);
    Mat A = small_root();
    EvalSpec sp{&F2, 2, A, 2, 0, ProjectionSpec::psi()};
    EvalCode C = eval_code_build(sp);

    // Monomial A^j X^i maps to generator row i*l + j.
    for (u32 i = 0; i < 2; ++i) {
        for (u32 j = 0; j < 2; ++j) {
            MatPoly P(F2, 2, 2);
            P.set_coeff(i, A.pow(j));
            CHECK(eval_encode(sp, P) == C.code.generator().row(i * 2 + j));
        }
    }

    MatPoly zero(F2, 2, 2);
    CHECK(eval_encode(sp, zero) == std::vector<u32>(6, 0));

    EvalSpec sprow{&F2, 2, A, 2, 0, ProjectionSpec::row(0)};
    MatPoly one(F2, 2, 2);
    one.set_coeff(0, Mat::identity(F2, 2));
    CHECK(eval_encode(sprow, one) == std::vector<u32>{1, 0, 1, 0, 1, 0});

    // Linearity.
    std::mt19937_64 rng(0x5eed0050);
    for (u32 rep = 0; rep < 20; ++rep) {
        MatPoly P(F2, 2, 2), Q(F2, 2, 2);
        for (u32 i = 0; i < 2; ++i) {
            P.set_coeff(i, A.pow(rng() % 3).scaled(u32(rng() % 2)));
            Q.set_coeff(i, A.pow(rng() % 3).scaled(u32(rng() % 2)));
        }
        std::vector<u32> lhs = eval_encode(sp, P + Q);
        std::vector<u32> rhs = vec_add(F2, eval_encode(sp, P), eval_encode(sp, Q));
        CHECK(lhs == rhs);
        CHECK(C.code.contains(lhs));
    }

    // Degree overflow and a coefficient outside F_q[A].
    MatPoly big(F2, 2, 2);
    big.set_coeff(2, Mat::identity(F2, 2));
    CHECK_THROWS_AS(eval_encode(sp, big), std::invalid_argument);
    MatPoly badc(F2, 2, 2);
    Mat E(F2, 2, 2);
    E.set(0, 0, 1);
    badc.set_coeff(0, E);
    CHECK_THROWS_AS(eval_encode(sp, badc), std::invalid_argument);
}

TEST_CASE("roots that are not primitive are rejected") {
    const Field& F8 = Field::get(2, 3);
    u32 x = F8.generator();
    Mat D(F8, 2, 2);
    D.set(0, 0, x);
    D.set(1, 1, F8.pow(x, 3));
    // Order 7, but q^l - 1 = 63.
    EvalSpec sp{&F8, 2, D, 2, 0, ProjectionSpec::psi()};
    CHECK_THROWS_AS(eval_code_build(sp), std::invalid_argument);

    const Field& F2 = Field::get(2, 1);
    EvalSpec sid{&F2, 2, Mat::identity(F2, 2), 1, 0, ProjectionSpec::psi()};
    CHECK_THROWS_AS(eval_code_build(sid), std::invalid_argument);
}
