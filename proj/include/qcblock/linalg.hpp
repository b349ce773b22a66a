#pragma once
// Dense matrices over a finite field.
//
// Entries are field encodings, stored row-major.  Vectors are plain
// std::vector<u32> of encodings; codewords are treated as row vectors.
// All binary operations require both operands to live over the same
// (interned) field and throw std::invalid_argument otherwise.

#include <optional>
#include <vector>

#include "qcblock/field.hpp"

namespace qcblock {

struct MatRref;

class Mat {
public:
    Mat(const Field& F, u32 rows, u32 cols);  // zero matrix
    static Mat identity(const Field& F, u32 n);
    static Mat scalar(const Field& F, u32 n, u32 a);  // a * I
    static Mat from_rows(const Field& F, const std::vector<std::vector<u32>>& rows);
    static Mat row_vector(const Field& F, const std::vector<u32>& v);
    static Mat col_vector(const Field& F, const std::vector<u32>& v);
    // Companion matrix of a monic polynomial (little-endian coefficients,
    // length n+1): subdiagonal of ones, last column -c_0..-c_{n-1}.
    static Mat companion(const Field& F, const std::vector<u32>& monic_coeffs);

    static Mat vstack(const std::vector<Mat>& parts);
    static Mat hstack(const std::vector<Mat>& parts);

    const Field& field() const { return *F_; }
    u32 rows() const { return r_; }
    u32 cols() const { return c_; }
    bool square() const { return r_ == c_; }

    u32 at(u32 i, u32 j) const { return a_[std::size_t(i) * c_ + j]; }
    void set(u32 i, u32 j, u32 v) { a_[std::size_t(i) * c_ + j] = v; }
    std::vector<u32> row(u32 i) const;
    std::vector<u32> col(u32 j) const;
    void set_row(u32 i, const std::vector<u32>& v);

    Mat block(u32 i0, u32 j0, u32 nrows, u32 ncols) const;
    Mat row_range(u32 i0, u32 nrows) const { return block(i0, 0, nrows, c_); }
    Mat col_range(u32 j0, u32 ncols) const { return block(0, j0, r_, ncols); }

    bool is_zero() const;
    bool is_identity() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    Mat scaled(u32 a) const;
    Mat transpose() const;
    // e < 0 requires an invertible matrix.
    Mat pow(i64 e) const;

    // y = A x (x indexed by columns).
    std::vector<u32> mul_vec(const std::vector<u32>& x) const;
    // y = x A (x indexed by rows).
    std::vector<u32> vec_mul(const std::vector<u32>& x) const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    MatRref rref() const;
    u32 rank() const;
    u32 det() const;       // square only
    Mat inverse() const;   // throws std::domain_error if singular

    // Rows form a basis of { x : A x = 0 } (x as a row of length cols()).
    // Result has cols() - rank() rows.
    Mat nullspace() const;

    // One solution of A x = b with free variables set to zero, or nullopt
    // if the system is inconsistent.
    std::optional<std::vector<u32>> solve(const std::vector<u32>& b) const;

    // RREF with zero rows removed: equal canonical forms iff equal row spaces.
    Mat canonical_rowspace() const;

    std::string to_string() const;  // rows of space-separated encodings

private:
    const Field* F_;
    u32 r_, c_;
    std::vector<u32> a_;

    void check_same_field(const Mat& o) const;
};

struct MatRref {
    Mat mat;                      // reduced row echelon form, same shape
    std::vector<u32> pivot_cols;  // one per nonzero row, strictly increasing
    u32 rank;
};

u32 vec_weight(const std::vector<u32>& v);
std::vector<u32> vec_add(const Field& F, const std::vector<u32>& a, const std::vector<u32>& b);
std::vector<u32> vec_sub(const Field& F, const std::vector<u32>& a, const std::vector<u32>& b);
std::vector<u32> vec_scale(const Field& F, u32 a, const std::vector<u32>& v);

}  // namespace qcblock
