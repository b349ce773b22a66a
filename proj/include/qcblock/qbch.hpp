#pragma once
// Quasi-BCH codes.  A primitive m-th root A in the l x l matrices over
// F_{q^s} defines, for a design distance delta, the code of all c in
// F_q^{m*l} whose m blocks satisfy sum_j A^{ij} c_j = 0 for i = 1..delta-1.

#include <string>
#include <vector>

#include "qcblock/qccode.hpp"

namespace qcblock {

struct RootCheck {
    bool ok;
    std::string witness;  // failing condition when !ok, empty otherwise
};

// A is an m-th primitive root when A^m = I and A^d - I is nonsingular for
// 0 < d < m (so the powers are distinct with nonsingular differences).
RootCheck verify_primitive_root(const Mat& A, u32 m);

// Powers A^0..A^{m-1}; requires A^m = I.
std::vector<Mat> root_powers(const Mat& A, u32 m);

// Companion matrix of the degree-l minimal polynomial over Fqs of an
// order-m element of the extension of degree l.  Throws std::domain_error
// with an explanation when no such element exists (the order of q^s modulo
// m must be exactly l) or when no candidate passes verification.
Mat companion_primitive_root(const Field& Fqs, u32 m, u32 l);

// Every verified primitive m-th root in the l x l matrices over F, in
// row-major encoding order (so the listing is deterministic).  The q^(l*l)
// candidate count must stay below 2^24.
std::vector<Mat> scan_primitive_roots(const Field& F, u32 l, u32 m);

struct QbchCode {
    LinearCode code;   // over Fq, length m*l, block width l
    Mat root;          // A over Fqs
    Mat parity;        // (delta-1)*l x m*l over Fqs, block (i,j) = A^{(i+1)j}
    u32 m, l, delta, s;
    const Field* Fq;
    const Field* Fqs;
};

QbchCode qbch_build(const Field& Fq, u32 m, u32 delta, const Mat& A);

// Coefficient j is the column sum_i A^{(j+1)i} y_i over Fqs, for j <
// order; vanishes identically on codewords for order <= delta-1.
MatPoly syndrome_series(const Field& Fq, const Mat& A, const std::vector<u32>& y, u32 order);
MatPoly syndrome_series(const std::vector<Mat>& pows, const Field& Fq,
                        const std::vector<u32>& y, u32 order);

}  // namespace qcblock
