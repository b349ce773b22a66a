#include "qcblock/qbch.hpp"

#include <numeric>
#include <stdexcept>

#include "qcblock/poly.hpp"

namespace qcblock {

RootCheck verify_primitive_root(const Mat& A, u32 m) {
    if (!A.square()) return {false, "matrix is not square"};
    if (m == 0) return {false, "m must be positive"};
    if (A.det() == 0) return {false, "matrix is singular"};
    const Field& F = A.field();
    Mat I = Mat::identity(F, A.rows());
    Mat P = I;
    for (u32 d = 1; d < m; ++d) {
        P = P * A;
        if ((P - I).det() == 0)
            return {false, "A^" + std::to_string(d) + " - I is singular"};
    }
    if (P * A != I) return {false, "A^m != I"};
    return {true, ""};
}

std::vector<Mat> root_powers(const Mat& A, u32 m) {
    const Field& F = A.field();
    std::vector<Mat> pows;
    pows.reserve(m);
    pows.push_back(Mat::identity(F, A.rows()));
    for (u32 i = 1; i < m; ++i) pows.push_back(pows.back() * A);
    if (pows.back() * A != pows[0])
        throw std::invalid_argument("root_powers: A^m != I");
    return pows;
}

Mat companion_primitive_root(const Field& Fqs, u32 m, u32 l) {
    if (m == 0 || l == 0)
        throw std::invalid_argument("companion_primitive_root: m, l must be positive");
    u64 qs = Fqs.q();
    if (std::gcd(qs, static_cast<u64>(m)) != 1)
        throw std::domain_error("companion_primitive_root: m shares a factor with the field order");
    u32 ord = 1;
    u64 acc = qs % m;
    while (acc != 1 % m) { acc = acc * (qs % m) % m; ++ord; }
    if (ord != l)
        throw std::domain_error(
            "companion_primitive_root: order of the field size modulo m is " +
            std::to_string(ord) + ", need " + std::to_string(l) +
            "; no order-m element has a degree-" + std::to_string(l) + " minimal polynomial");
    const Field& big = Field::get(Fqs.p(), Fqs.d() * l);
    const Embedding& emb = Embedding::get(Fqs, big);
    u64 Q = big.q();
    u32 base = big.pow(big.generator(), static_cast<i64>((Q - 1) / m));
    for (u32 t = 1; t < m || t == 1; ++t) {
        if (std::gcd(t, m) != 1) continue;
        u32 alpha = big.pow(base, t);
        Poly mp = minimal_polynomial(alpha, emb);
        if (mp.degree() != static_cast<int>(l)) continue;
        Mat A = Mat::companion(Fqs, mp.coeffs());
        if (verify_primitive_root(A, m).ok) return A;
    }
    throw std::domain_error("companion_primitive_root: no order-m candidate verified");
}

std::vector<Mat> scan_primitive_roots(const Field& F, u32 l, u32 m) {
    if (l == 0 || m == 0)
        throw std::invalid_argument("scan_primitive_roots: l, m must be positive");
    u64 cells = static_cast<u64>(l) * l;
    u64 total = 1;
    for (u64 i = 0; i < cells; ++i) {
        total *= F.q();
        if (total > (1ull << 24))
            throw std::invalid_argument("scan_primitive_roots: q^(l*l) exceeds 2^24");
    }
    std::vector<Mat> roots;
    for (u64 t = 0; t < total; ++t) {
        Mat A(F, l, l);
        u64 v = t;
        // Row-major digit expansion: cell (0,0) is the most significant digit.
        for (u32 r = l; r-- > 0;)
            for (u32 c = l; c-- > 0;) {
                A.set(r, c, static_cast<u32>(v % F.q()));
                v /= F.q();
            }
        if (verify_primitive_root(A, m).ok) roots.push_back(std::move(A));
    }
    return roots;
}

QbchCode qbch_build(const Field& Fq, u32 m, u32 delta, const Mat& A) {
    if (delta < 2 || delta > m)
        throw std::invalid_argument("qbch_build: need 2 <= delta <= m");
    RootCheck rc = verify_primitive_root(A, m);
    if (!rc.ok)
        throw std::invalid_argument("qbch_build: not a primitive root: " + rc.witness);
    const Field& Fqs = A.field();
    const Embedding& emb = Embedding::get(Fq, Fqs);
    u32 s = emb.degree();
    u32 l = A.rows();
    u32 n = m * l;
    std::vector<Mat> pows = root_powers(A, m);

    Mat parity(Fqs, (delta - 1) * l, n);
    for (u32 i = 1; i < delta; ++i)
        for (u32 j = 0; j < m; ++j) {
            const Mat& P = pows[static_cast<u64>(i) * j % m];
            for (u32 t = 0; t < l; ++t)
                for (u32 u = 0; u < l; ++u)
                    parity.set((i - 1) * l + t, j * l + u, P.at(t, u));
        }

    // Expand each Fqs row into s rows over Fq; scaling by a subfield scalar
    // acts coordinate-wise on the coordinates relative to the subfield.
    Mat hq(Fq, parity.rows() * s, n);
    for (u32 r = 0; r < parity.rows(); ++r)
        for (u32 c = 0; c < n; ++c) {
            std::vector<u32> crd = emb.coords(parity.at(r, c));
            for (u32 sig = 0; sig < s; ++sig) hq.set(r * s + sig, c, crd[sig]);
        }

    LinearCode code = LinearCode::from_rows(Fq, hq.nullspace());
    code.set_block_len(l);
    return QbchCode{std::move(code), A, std::move(parity), m, l, delta, s, &Fq, &Fqs};
}

MatPoly syndrome_series(const std::vector<Mat>& pows, const Field& Fq,
                        const std::vector<u32>& y, u32 order) {
    if (pows.empty()) throw std::invalid_argument("syndrome_series: no powers");
    const Field& Fqs = pows[0].field();
    const Embedding& emb = Embedding::get(Fq, Fqs);
    u32 l = pows[0].rows();
    u32 m = static_cast<u32>(pows.size());
    if (y.size() != static_cast<size_t>(m) * l)
        throw std::invalid_argument("syndrome_series: wrong length");
    std::vector<Mat> coeffs;
    coeffs.reserve(order);
    for (u32 j = 0; j < order; ++j) {
        Mat S(Fqs, l, 1);
        for (u32 i = 0; i < m; ++i) {
            bool nz = false;
            for (u32 u = 0; u < l; ++u) nz = nz || y[i * l + u] != 0;
            if (!nz) continue;
            const Mat& P = pows[static_cast<u64>(j + 1) * i % m];
            for (u32 t = 0; t < l; ++t) {
                u32 acc = S.at(t, 0);
                for (u32 u = 0; u < l; ++u)
                    acc = Fqs.add(acc, Fqs.mul(P.at(t, u), emb.map(y[i * l + u])));
                S.set(t, 0, acc);
            }
        }
        coeffs.push_back(std::move(S));
    }
    return MatPoly::from_coeffs(Fqs, coeffs);
}

MatPoly syndrome_series(const Field& Fq, const Mat& A, const std::vector<u32>& y, u32 order) {
    u32 l = A.rows();
    if (l == 0 || y.size() % l != 0)
        throw std::invalid_argument("syndrome_series: length not a multiple of l");
    u32 m = static_cast<u32>(y.size() / l);
    return syndrome_series(root_powers(A, m), Fq, y, order);
}

}  // namespace qcblock
