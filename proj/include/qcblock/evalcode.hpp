#pragma once
// Quasi-cyclic evaluation codes.
//
// F_q[A] is a field of q^l elements when A has multiplicative order
// q^l - 1 (its minimal polynomial is then irreducible of degree l).
// Polynomials over F_q[A] of degree < k are evaluated at the powers
// A^0, A^1, ..., and each value, an l x l matrix, is projected to a
// length-l vector.  With all m = q^l - 1 points the result is an
// l-quasi-cyclic code; evaluating at a prefix of the powers shortens it.

#include <optional>
#include <utility>
#include <vector>

#include "qcblock/distance.hpp"
#include "qcblock/poly.hpp"
#include "qcblock/qccode.hpp"

namespace qcblock {

// F_q-linear map from F_q[A] to F_q^l.  Every variant acts through the
// coordinates of B = b_0 I + b_1 A + ... + b_{l-1} A^{l-1}.
struct ProjectionSpec {
    enum class Kind { Row, Col, Coords, Psi, PsiPi };
    Kind kind = Kind::Psi;
    u32 index = 0;                                // Row / Col
    std::vector<std::pair<u32, u32>> coords;      // Coords, 0-based entries
    std::optional<Mat> pi;                        // PsiPi right factor

    static ProjectionSpec row(u32 i);
    static ProjectionSpec col(u32 j);
    static ProjectionSpec entries(std::vector<std::pair<u32, u32>> positions);
    static ProjectionSpec psi();
    static ProjectionSpec psi_pi(Mat pi);
};

// Bound to a concrete root A: solves psi coordinates and carries the l x l
// matrix of the projection in the psi basis.
class Projector {
public:
    Projector(const Mat& A, const ProjectionSpec& spec);

    u32 l() const { return l_; }
    // Coordinates of B in the basis I, A, ..., A^{l-1}; throws
    // std::invalid_argument when B is outside F_q[A].
    std::vector<u32> psi_coords(const Mat& B) const;
    std::vector<u32> apply(const Mat& B) const;
    // Kernel dimension of the map on F_q[A].
    u32 kernel_dim() const { return l_ - map_.rank(); }

private:
    const Field* F_;
    u32 l_;
    std::vector<Mat> pows_;        // I, A, ..., A^{l-1}
    std::vector<u32> basis_rows_;  // l independent rows of [vec(A^t)]
    Mat solve_;                    // inverse of that square block
    Mat map_;                      // row t = projection of A^t
};

struct EvalSpec {
    const Field* F = nullptr;  // F_q
    u32 l = 0;
    Mat root;                  // A, order q^l - 1 over F_q
    u32 k = 0;                 // degree bound
    u32 points = 0;            // 0 means all q^l - 1 points
    ProjectionSpec proj;
};

struct EvalCode {
    LinearCode code;
    Mat root;
    u32 m;            // q^l - 1
    u32 points;       // evaluated points
    u32 k, l;
    bool full_points; // quasi-cyclic only in this case
    ProjectionSpec proj;
};

// Minimal polynomial of a square matrix: least monic p with p(A) = 0.
Poly matrix_minimal_polynomial(const Mat& A);

// Evaluate P (coefficients in F_q[A], degree < k) at A^0..A^{points-1} and
// project each value.  Throws on degree overflow or a coefficient outside
// F_q[A].
std::vector<u32> eval_encode(const EvalSpec& spec, const MatPoly& P);

// Generator rows are the images of the monomials A^j X^i, (i, j) ascending
// with i the X-degree.  Full-point builds verify quasi-cyclicity, the
// field structure of F_q[A], and the dimension bound.
EvalCode eval_code_build(const EvalSpec& spec);

// Same spec restricted to the first `points` powers; requires k <= points.
EvalCode eval_code_shortened(const EvalSpec& spec, u32 points);

// For injective projections (row, col, psi) the block distance is at least
// points - k + 1.  Measures it exhaustively; `budget` as in
// min_distance_enum.
bool mds_like_bound_check(const EvalCode& C, u64 budget = u64(1) << 26);

}  // namespace qcblock
