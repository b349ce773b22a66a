#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcblock/field.hpp"
#include "qcblock/poly.hpp"

using namespace qcblock;

TEST_CASE("F4 arithmetic table") {
    const Field& F4 = Field::get(2, 2);
    CHECK(F4.q() == 4);
    const u32 w = 2, w2 = 3;  // w = class of X, w2 = w + 1
    CHECK(F4.mul(w, w) == w2);
    CHECK(F4.mul(w, w2) == 1);
    CHECK(F4.add(w, w2) == 1);
    CHECK(F4.add(w, w) == 0);
    CHECK(F4.inv(w) == w2);
    CHECK(F4.element_order(w) == 3);
    CHECK(F4.pow(w, 3) == 1);
    CHECK(F4.pow(w, -1) == w2);
}

TEST_CASE("F25 Conway field") {
    const Field& F = Field::get(5, 2);
    CHECK(F.q() == 25);
    CHECK(F.modulus() == std::vector<u32>{2, 4, 1});
    const u32 w = F.x_class();
    CHECK(w == 5);
    CHECK(F.element_order(w) == 24);
    CHECK(F.pow(w, 12) == 4);  // w^12 = -1
    CHECK(F.pow(w, 24) == 1);
    // w^2 = -4w - 2 = w + 3: coeffs (3, 1) -> 3 + 5 = 8
    CHECK(F.mul(w, w) == 8);
    CHECK(F.spec_line() == "GF 5 2 2 4 1");
}

TEST_CASE("F64 Conway field") {
    const Field& F = Field::get(2, 6);
    CHECK(F.q() == 64);
    const u32 b = F.x_class();
    CHECK(F.element_order(b) == 63);
    // b^6 = b^4 + b^3 + b + 1 -> encoding 16+8+2+1 = 27
    CHECK(F.pow(b, 6) == 27);
    CHECK(F.element_order(F.pow(b, 9)) == 7);
    CHECK(F.element_order(F.pow(b, 3)) == 21);
}

TEST_CASE("F8 Conway field") {
    const Field& F = Field::get(2, 3);
    const u32 b = F.x_class();
    CHECK(F.element_order(b) == 7);
    CHECK(F.pow(b, 3) == 3);  // b^3 = b + 1
}

TEST_CASE("prime fields") {
    const Field& F5 = Field::get(5, 1);
    CHECK(F5.generator() == 2);
    CHECK(F5.element_order(2) == 4);
    CHECK(F5.add(3, 4) == 2);
    CHECK(F5.neg(2) == 3);
    CHECK(F5.inv(3) == 2);
    const Field& F2 = Field::get(2, 1);
    CHECK(F2.add(1, 1) == 0);
    CHECK(F2.mul(1, 1) == 1);
}

TEST_CASE("field axioms exhaustive for q <= 25") {
    for (auto [p, d] : std::vector<std::pair<u32, u32>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
        const Field& F = Field::get(p, d);
        for (u32 a = 0; a < F.q(); ++a)
            for (u32 b = 0; b < F.q(); ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (u32 c = 0; c < F.q(); ++c) {
                    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    REQUIRE(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                }
            }
        for (u32 a = 1; a < F.q(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
}

TEST_CASE("invalid fields rejected") {
    CHECK_THROWS(Field::with_modulus(2, {1, 0, 1}));      // x^2+1 = (x+1)^2
    CHECK_THROWS(Field::with_modulus(5, {1, 0, 1}));      // roots +-2
    CHECK_THROWS(Field::with_modulus(4, {1, 1, 1}));      // 4 not prime
    CHECK_THROWS(Field::with_modulus(2, {1, 1, 1, 1}));   // reducible cubic? x^3+x^2+x+1=(x+1)(x^2+1)
    CHECK_NOTHROW(Field::with_modulus(5, {3, 0, 1}));     // x^2+3 irreducible
    const Field& F = Field::get(2, 2);
    CHECK_THROWS(F.inv(0));
    CHECK_THROWS(F.element_order(0));
    CHECK_THROWS(F.pow(0, -1));
}

TEST_CASE("default (5,6) field constructs deterministically") {
    const Field& F = Field::get(5, 6);
    CHECK(F.q() == 15625);
    CHECK(F.element_order(F.generator()) == 15624);
    const Field& F2 = Field::get(5, 6);
    CHECK(&F == &F2);  // interned
}

TEST_CASE("embedding F4 into F64") {
    const Field& F4 = Field::get(2, 2);
    const Field& F64 = Field::get(2, 6);
    const Embedding& e = Embedding::get(F4, F64);
    CHECK(e.degree() == 3);
    // roots of x^2+x+1 in F64 are b^21 = b^3+b^2+b = 14 and b^42 = 15;
    // the canonical image is the smaller encoding (hand-checked: 14^2+14+1 = 0)
    CHECK(e.generator_image() == 14);
    CHECK(F64.element_order(14) == 3);
    for (u32 x = 0; x < 4; ++x)
        for (u32 y = 0; y < 4; ++y) {
            CHECK(e.map(F4.mul(x, y)) == F64.mul(e.map(x), e.map(y)));
            CHECK(e.map(F4.add(x, y)) == F64.add(e.map(x), e.map(y)));
        }
    for (u32 x = 0; x < 4; ++x) {
        auto back = e.preimage(e.map(x));
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
    CHECK(!e.preimage(F64.x_class()).has_value());  // b has degree 6, not in F4
}

TEST_CASE("embedding round trips exhaustive for q <= 25") {
    std::vector<std::pair<const Field*, const Field*>> pairs = {
        {&Field::get(2, 1), &Field::get(2, 2)},
        {&Field::get(2, 2), &Field::get(2, 6)},
        {&Field::get(2, 3), &Field::get(2, 6)},
        {&Field::get(5, 1), &Field::get(5, 2)},
        {&Field::get(5, 2), &Field::get(5, 6)},
    };
    for (auto [src, dst] : pairs) {
        const Embedding& e = Embedding::get(*src, *dst);
        for (u32 x = 0; x < src->q(); ++x) {
            auto back = e.preimage(e.map(x));
            REQUIRE(back.has_value());
            REQUIRE(*back == x);
        }
        // homomorphism on a sample grid
        for (u32 x = 0; x < src->q(); x += 3)
            for (u32 y = 1; y < src->q(); y += 5) {
                REQUIRE(e.map(src->mul(x, y)) == dst->mul(e.map(x), e.map(y)));
                REQUIRE(e.map(src->add(x, y)) == dst->add(e.map(x), e.map(y)));
            }
    }
}

TEST_CASE("composable embeddings agree on the base field") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    const Field& F64 = Field::get(2, 6);
    const Embedding& a = Embedding::get(F2, F4);
    const Embedding& b = Embedding::get(F4, F64);
    const Embedding& direct = Embedding::get(F2, F64);
    for (u32 x = 0; x < 2; ++x) CHECK(b.map(a.map(x)) == direct.map(x));
    const Field& F5 = Field::get(5, 1);
    const Field& F25 = Field::get(5, 2);
    const Field& F56 = Field::get(5, 6);
    const Embedding& c = Embedding::get(F5, F25);
    const Embedding& d = Embedding::get(F25, F56);
    const Embedding& direct5 = Embedding::get(F5, F56);
    for (u32 x = 0; x < 5; ++x) CHECK(d.map(c.map(x)) == direct5.map(x));
}

TEST_CASE("relative coordinates") {
    const Field& F5 = Field::get(5, 1);
    const Field& F25 = Field::get(5, 2);
    const Embedding& e = Embedding::get(F5, F25);
    for (u32 y = 0; y < 25; ++y) {
        auto c = e.coords(y);
        REQUIRE(c.size() == 2);
        CHECK(e.from_coords(c) == y);
    }
    // coords are F5-linear
    for (u32 y = 0; y < 25; ++y)
        for (u32 s = 0; s < 5; ++s) {
            auto cy = e.coords(y);
            auto cs = e.coords(F25.mul(e.map(s), y));
            for (u32 i = 0; i < 2; ++i) CHECK(cs[i] == F5.mul(s, cy[i]));
        }
    const Field& F4 = Field::get(2, 2);
    const Field& F64 = Field::get(2, 6);
    const Embedding& e2 = Embedding::get(F4, F64);
    for (u32 y = 0; y < 64; ++y) CHECK(e2.from_coords(e2.coords(y)) == y);
}

TEST_CASE("minimal polynomials") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    const Embedding& e = Embedding::get(F2, F4);
    Poly m = minimal_polynomial(2, e);  // w over F2
    CHECK(m.coeffs() == std::vector<u32>{1, 1, 1});

    const Field& F64 = Field::get(2, 6);
    const Embedding& e46 = Embedding::get(F4, F64);
    Poly mb = minimal_polynomial(F64.x_class(), e46);
    CHECK(mb.degree() == 3);
    CHECK(mb.is_irreducible());
    // the generator is a root of its own minimal polynomial after mapping back up
    u32 acc = 0;
    for (int i = mb.degree(); i >= 0; --i)
        acc = F64.add(F64.mul(acc, F64.x_class()), e46.map(mb.coeff(u32(i))));
    CHECK(acc == 0);

    // minimal polynomial over the prime field of an order-7 element divides x^7-1
    const Embedding& e26 = Embedding::get(F2, F64);
    Poly m7 = minimal_polynomial(F64.pow(F64.x_class(), 9), e26);
    CHECK(m7.degree() == 3);
}

TEST_CASE("poly divmod and gcd") {
    const Field& F = Field::get(5, 1);
    Poly a(F, {1, 2, 0, 3, 4});
    Poly b(F, {2, 1, 1});
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    Poly g = Poly::gcd(a * b, b);
    CHECK(g == b.monic());
    CHECK_THROWS(a.divmod(Poly(F)));
}

TEST_CASE("poly irreducibility and roots") {
    const Field& F2 = Field::get(2, 1);
    CHECK(Poly(F2, {1, 1, 1}).is_irreducible());
    CHECK(!Poly(F2, {1, 0, 1}).is_irreducible());
    CHECK(Poly(F2, {1, 1, 0, 0, 1}).is_irreducible());        // x^4+x+1
    CHECK(!Poly(F2, {1, 0, 0, 0, 1}).is_irreducible());       // (x+1)^4
    CHECK(!Poly(F2, {1, 1, 1, 1, 1, 1, 1}).is_irreducible()); // (x^7-1)/(x-1) = product of two cubics
    const Field& F4 = Field::get(2, 2);
    auto rts = Poly(F4, {1, 1, 1}).roots();
    CHECK(rts == std::vector<u32>{2, 3});
}
