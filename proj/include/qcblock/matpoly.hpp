#pragma once
// Polynomials with matrix coefficients.
//
// A MatPoly is sum_i C_i X^i where every C_i has the same shape r x c over
// one field.  Multiplication is coefficient convolution with matrix products
// (ring of l x l coefficients is non-commutative), which is also the pairing
// of a matrix polynomial with a vector polynomial when c == 1.  Coefficients
// above the stored degree read as zero; internal storage keeps no trailing
// zero coefficients.

#include <vector>

#include "qcblock/linalg.hpp"

namespace qcblock {

class MatPoly {
public:
    MatPoly(const Field& F, u32 r, u32 c);  // zero polynomial
    static MatPoly constant(const Mat& c0);
    static MatPoly from_coeffs(const Field& F, std::vector<Mat> coeffs);
    // I - B X (B square), the basic factor of error locators.
    static MatPoly one_minus_x(const Mat& B);

    const Field& field() const { return *F_; }
    u32 coeff_rows() const { return r_; }
    u32 coeff_cols() const { return c_; }
    int deg() const { return int(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }

    Mat coeff(u32 i) const;           // zero matrix beyond the degree
    void set_coeff(u32 i, const Mat& v);

    MatPoly operator+(const MatPoly& o) const;
    MatPoly operator-(const MatPoly& o) const;
    MatPoly operator*(const MatPoly& o) const;
    MatPoly scaled_left(const Mat& m) const;   // m * C_i
    MatPoly scaled_right(const Mat& m) const;  // C_i * m
    MatPoly scaled(u32 a) const;

    MatPoly shift(u32 k) const;       // * X^k
    MatPoly truncate(u32 order) const;  // mod X^order
    // Fold exponents modulo m: image in coefficients of X^0..X^{m-1}.
    MatPoly mod_cyclic(u32 m) const;

    // Reverse coefficients inside the window [0, k]; requires k >= deg().
    MatPoly reciprocal(u32 k) const;
    MatPoly transpose_coeffs() const;

    // sum_i B^i C_i (B square, rows match) and sum_i C_i B^i (cols match).
    Mat eval_left(const Mat& B) const;
    Mat eval_right(const Mat& B) const;

    // Q with (*this) * Q == I mod X^order; constant coefficient must be
    // invertible (throws std::domain_error otherwise).
    MatPoly series_inverse(u32 order) const;

    bool operator==(const MatPoly& o) const;
    bool operator!=(const MatPoly& o) const { return !(*this == o); }

private:
    const Field* F_;
    u32 r_, c_;
    std::vector<Mat> coef_;  // no trailing zero matrices

    void trim();
    void check_compatible(const MatPoly& o) const;
};

}  // namespace qcblock
