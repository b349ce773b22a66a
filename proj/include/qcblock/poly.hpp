#pragma once
// Univariate polynomials over a Field, little-endian coefficient encodings.

#include <vector>

#include "qcblock/field.hpp"

namespace qcblock {

class Poly {
public:
    Poly() : F_(nullptr) {}
    explicit Poly(const Field& F) : F_(&F) {}
    Poly(const Field& F, std::vector<u32> coeffs);

    static Poly x(const Field& F);                    // the monomial X
    static Poly constant(const Field& F, u32 c);

    const Field& field() const { return *F_; }
    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    u32 coeff(u32 i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u32>& coeffs() const { return c_; }
    u32 lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return F_ == o.F_ && c_ == o.c_; }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly mod(const Poly& divisor) const { return divmod(divisor).second; }
    Poly monic() const;
    Poly shift(u32 k) const;                          // multiply by X^k
    Poly powmod(u64 e, const Poly& modulus) const;

    u32 eval(u32 x) const;
    std::vector<u32> roots() const;                   // brute force over the field

    // gcd made monic; irreducibility via gcd(f, X^{q^i} - X) for i <= deg/2.
    static Poly gcd(Poly a, Poly b);
    bool is_irreducible() const;

private:
    const Field* F_;
    std::vector<u32> c_;
    void trim();
};

// Monic minimal polynomial of a over the embedded subfield: the product of
// (X - a^{Q^i}) over the Frobenius orbit, Q the subfield order, with the
// coefficients pulled back along the embedding.
Poly minimal_polynomial(u32 a, const Embedding& emb);

}  // namespace qcblock
