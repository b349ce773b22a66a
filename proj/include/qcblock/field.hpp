#pragma once
// Finite fields F_{p^d} with explicit towers.
//
// An element of F_{p^d} is a coefficient vector (c_0, ..., c_{d-1}) over F_p,
// little-endian with respect to the residue class of X modulo an irreducible
// modulus, and is handled as its integer encoding sum(c_i p^i).  Fields are
// interned: Field::get / Field::with_modulus return references to unique
// instances, so pointer equality is field equality.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcblock {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

class Field {
public:
    // Field with the default modulus for (p, d): a fixed table of Conway
    // polynomials for the towers used here, otherwise the monic irreducible
    // polynomial of degree d over F_p with the smallest integer encoding.
    static const Field& get(u32 p, u32 d);
    // Field with an explicit monic irreducible modulus (little-endian,
    // length d+1).  Throws std::invalid_argument on invalid input.
    static const Field& with_modulus(u32 p, const std::vector<u32>& modulus);

    u32 p() const { return p_; }
    u32 d() const { return d_; }
    u32 q() const { return q_; }
    const std::vector<u32>& modulus() const { return modulus_; }
    bool prime_field() const { return d_ == 1; }

    // Multiplicative generator used for the discrete-log tables.
    u32 generator() const { return gen_; }
    // Residue class of X (encoding p) for d > 1; generates the field over F_p.
    u32 x_class() const { return d_ > 1 ? p_ : gen_; }

    u32 add(u32 a, u32 b) const;
    u32 sub(u32 a, u32 b) const;
    u32 neg(u32 a) const;
    u32 mul(u32 a, u32 b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(u64(log_[a]) + log_[b]) % (q_ - 1)];
    }
    u32 inv(u32 a) const;           // throws std::domain_error on 0
    u32 div(u32 a, u32 b) const { return mul(a, inv(b)); }
    u32 pow(u32 a, i64 e) const;    // a != 0 for negative e

    // Multiplicative order; throws std::domain_error on 0.
    u64 element_order(u32 a) const;

    u32 coeff(u32 enc, u32 i) const;                 // digit i of the encoding
    u32 encode(const std::vector<u32>& coeffs) const;
    std::vector<u32> coeffs(u32 enc) const;

    // "GF p d c0 c1 ... cd"
    std::string spec_line() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(u32 p, u32 d, std::vector<u32> modulus);

    u32 p_, d_, q_;
    std::vector<u32> modulus_;
    u32 gen_ = 0;
    std::vector<u32> exp_;  // exp_[i] = gen^i, i in [0, q-2]
    std::vector<u32> log_;  // log_[exp_[i]] = i; log_[0] unused
    std::vector<u64> order_prime_factors_;

    u32 mul_slow(u32 a, u32 b) const;  // polynomial multiply mod modulus
    void build_tables();
};

// Canonical embedding F_{p^a} -> F_{p^b} for a | b.  The image of the source
// generator (class of X) is the root of the source modulus in the target with
// the smallest integer encoding, which makes composable embeddings agree on
// the prime field and keeps the choice reproducible.
class Embedding {
public:
    static const Embedding& get(const Field& src, const Field& dst);

    const Field& src() const { return *src_; }
    const Field& dst() const { return *dst_; }
    u32 degree() const { return t_; }          // [dst : src]
    u32 generator_image() const { return root_; }

    u32 map(u32 x) const;
    // Preimage under map, if x lies in the embedded subfield.
    std::optional<u32> preimage(u32 x) const;

    // Coordinates of y in the source-basis (1, g, ..., g^{t-1}) where g is the
    // target's class of X; length t, entries are source encodings.
    std::vector<u32> coords(u32 y) const;
    u32 from_coords(const std::vector<u32>& c) const;

    Embedding(const Embedding&) = delete;
    Embedding& operator=(const Embedding&) = delete;

private:
    Embedding(const Field& src, const Field& dst);

    const Field* src_;
    const Field* dst_;
    u32 t_;
    u32 root_;
    std::vector<u32> root_pow_;   // root^i, i < src.d
    // Solver for digits(y) = M * digits(x): RREF of M with pivot bookkeeping.
    std::vector<std::vector<u32>> pre_rref_;
    std::vector<int> pre_pivot_of_row_;
    // Same machinery for relative coordinates (square system).
    std::vector<std::vector<u32>> crd_rref_;
    std::vector<int> crd_pivot_of_row_;
};

}  // namespace qcblock
