#include "qcblock/evalcode.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcblock/poly.hpp"
#include "qcblock/qbch.hpp"

namespace qcblock {

namespace {

std::vector<u32> vec_of(const Mat& M) {
    std::vector<u32> v(std::size_t(M.rows()) * M.cols());
    for (u32 i = 0; i < M.rows(); ++i)
        for (u32 j = 0; j < M.cols(); ++j) v[std::size_t(i) * M.cols() + j] = M.at(i, j);
    return v;
}

u64 field_power(u64 q, u32 l) {
    u64 r = 1;
    for (u32 i = 0; i < l; ++i) {
        if (r > (u64(1) << 40)) throw std::invalid_argument("q^l out of range");
        r *= q;
    }
    return r;
}

}  // namespace

ProjectionSpec ProjectionSpec::row(u32 i) {
    ProjectionSpec s;
    s.kind = Kind::Row;
    s.index = i;
    return s;
}

ProjectionSpec ProjectionSpec::col(u32 j) {
    ProjectionSpec s;
    s.kind = Kind::Col;
    s.index = j;
    return s;
}

ProjectionSpec ProjectionSpec::entries(std::vector<std::pair<u32, u32>> positions) {
    ProjectionSpec s;
    s.kind = Kind::Coords;
    s.coords = std::move(positions);
    return s;
}

ProjectionSpec ProjectionSpec::psi() { return ProjectionSpec{}; }

ProjectionSpec ProjectionSpec::psi_pi(Mat pi) {
    ProjectionSpec s;
    s.kind = Kind::PsiPi;
    s.pi = std::move(pi);
    return s;
}

Projector::Projector(const Mat& A, const ProjectionSpec& spec)
    : F_(&A.field()), l_(A.rows()), solve_(A.field(), 0, 0), map_(A.field(), l_, l_) {
    if (!A.square() || l_ == 0) throw std::invalid_argument("root must be square");
    pows_.reserve(l_);
    Mat P = Mat::identity(*F_, l_);
    for (u32 t = 0; t < l_; ++t) {
        pows_.push_back(P);
        if (t + 1 < l_) P = P * A;
    }
    Mat V(*F_, l_ * l_, l_);
    for (u32 t = 0; t < l_; ++t) {
        std::vector<u32> v = vec_of(pows_[t]);
        for (u32 i = 0; i < l_ * l_; ++i) V.set(i, t, v[i]);
    }
    MatRref Rt = V.transpose().rref();
    if (Rt.rank != l_)
        throw std::invalid_argument("I, A, ..., A^{l-1} are linearly dependent");
    basis_rows_ = Rt.pivot_cols;
    Mat S(*F_, l_, l_);
    for (u32 j = 0; j < l_; ++j)
        for (u32 t = 0; t < l_; ++t) S.set(j, t, V.at(basis_rows_[j], t));
    solve_ = S.inverse();
    switch (spec.kind) {
        case ProjectionSpec::Kind::Row:
            if (spec.index >= l_) throw std::invalid_argument("row index out of range");
            for (u32 t = 0; t < l_; ++t) map_.set_row(t, pows_[t].row(spec.index));
            break;
        case ProjectionSpec::Kind::Col:
            if (spec.index >= l_) throw std::invalid_argument("column index out of range");
            for (u32 t = 0; t < l_; ++t) map_.set_row(t, pows_[t].col(spec.index));
            break;
        case ProjectionSpec::Kind::Coords: {
            if (spec.coords.size() != l_)
                throw std::invalid_argument("need exactly l entry positions");
            for (u32 a = 0; a < l_; ++a) {
                auto [r, c] = spec.coords[a];
                if (r >= l_ || c >= l_) throw std::invalid_argument("entry position out of range");
                for (u32 b = a + 1; b < l_; ++b)
                    if (spec.coords[a] == spec.coords[b])
                        throw std::invalid_argument("entry positions must be distinct");
                for (u32 t = 0; t < l_; ++t) map_.set(t, a, pows_[t].at(r, c));
            }
            break;
        }
        case ProjectionSpec::Kind::Psi:
            map_ = Mat::identity(*F_, l_);
            break;
        case ProjectionSpec::Kind::PsiPi:
            if (!spec.pi || &spec.pi->field() != F_ || spec.pi->rows() != l_ ||
                spec.pi->cols() != l_)
                throw std::invalid_argument("psi_pi needs an l x l matrix over F_q");
            map_ = *spec.pi;
            break;
    }
}

std::vector<u32> Projector::psi_coords(const Mat& B) const {
    if (&B.field() != F_ || B.rows() != l_ || B.cols() != l_)
        throw std::invalid_argument("bad operand shape");
    std::vector<u32> vb = vec_of(B);
    std::vector<u32> rhs(l_);
    for (u32 j = 0; j < l_; ++j) rhs[j] = vb[basis_rows_[j]];
    std::vector<u32> x = solve_.mul_vec(rhs);
    // The restricted solve always succeeds; membership in F_q[A] needs the
    // full reconstruction to match.
    Mat R(*F_, l_, l_);
    for (u32 t = 0; t < l_; ++t)
        if (x[t]) R = R + pows_[t].scaled(x[t]);
    if (R != B) throw std::invalid_argument("matrix is not a polynomial in the root");
    return x;
}

std::vector<u32> Projector::apply(const Mat& B) const {
    return map_.vec_mul(psi_coords(B));
}

Poly matrix_minimal_polynomial(const Mat& A) {
    if (!A.square() || A.rows() == 0) throw std::invalid_argument("matrix must be square");
    const Field& F = A.field();
    const u32 l = A.rows();
    Mat P = Mat::identity(F, l);
    std::vector<std::vector<u32>> vecs;
    for (u32 t = 0;; ++t) {
        std::vector<u32> v = vec_of(P);
        Mat M(F, l * l, t);
        for (u32 c = 0; c < t; ++c)
            for (u32 i = 0; i < l * l; ++i) M.set(i, c, vecs[c][i]);
        if (auto x = M.solve(v)) {
            // A^t = sum_c x_c A^c, so the minimal polynomial is
            // X^t - sum x_c X^c.
            std::vector<u32> coeffs(t + 1, 0);
            for (u32 c = 0; c < t; ++c) coeffs[c] = F.neg((*x)[c]);
            coeffs[t] = 1;
            return Poly(F, coeffs);
        }
        vecs.push_back(std::move(v));
        P = P * A;
    }
}

namespace {

struct Resolved {
    u32 m;
    u32 points;
    bool full;
};

Resolved resolve(const EvalSpec& spec) {
    if (!spec.F) throw std::invalid_argument("spec has no field");
    const Field& F = *spec.F;
    if (spec.l == 0 || spec.root.rows() != spec.l || !spec.root.square() ||
        &spec.root.field() != &F)
        throw std::invalid_argument("root must be l x l over F_q");
    u64 m64 = field_power(F.q(), spec.l) - 1;
    if (m64 > (u64(1) << 26)) throw std::invalid_argument("q^l - 1 too large");
    u32 m = u32(m64);
    u32 points = spec.points == 0 ? m : spec.points;
    if (points > m) throw std::invalid_argument("more points than powers of the root");
    if (spec.k == 0 || spec.k > points)
        throw std::invalid_argument("degree bound must satisfy 1 <= k <= points");
    return Resolved{m, points, points == m};
}

}  // namespace

std::vector<u32> eval_encode(const EvalSpec& spec, const MatPoly& P) {
    Resolved r = resolve(spec);
    const Field& F = *spec.F;
    if (&P.field() != &F || P.coeff_rows() != spec.l || P.coeff_cols() != spec.l)
        throw std::invalid_argument("polynomial coefficients must be l x l over F_q");
    if (P.deg() >= 0 && u32(P.deg()) >= spec.k)
        throw std::invalid_argument("degree overflow");
    Projector pr(spec.root, spec.proj);
    for (int i = 0; i <= P.deg(); ++i) pr.psi_coords(P.coeff(u32(i)));
    std::vector<Mat> pows = root_powers(spec.root, r.m);
    std::vector<u32> out;
    out.reserve(std::size_t(r.points) * spec.l);
    for (u32 u = 0; u < r.points; ++u) {
        Mat val(F, spec.l, spec.l);
        for (int i = 0; i <= P.deg(); ++i)
            val = val + P.coeff(u32(i)) * pows[(u64(u) * u32(i)) % r.m];
        std::vector<u32> block = pr.apply(val);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

EvalCode eval_code_build(const EvalSpec& spec) {
    Resolved r = resolve(spec);
    const Field& F = *spec.F;
    const u32 l = spec.l;
    RootCheck rc = verify_primitive_root(spec.root, r.m);
    if (!rc.ok)
        throw std::invalid_argument("root is not primitive of order q^l - 1: " + rc.witness);
    // F_q[A] is a field of q^l elements.
    Poly mp = matrix_minimal_polynomial(spec.root);
    if (mp.degree() != int(l) || !mp.is_irreducible())
        throw std::logic_error("minimal polynomial of an accepted root must be irreducible of degree l");
    Projector pr(spec.root, spec.proj);
    std::vector<Mat> pows = root_powers(spec.root, r.m);
    std::vector<std::vector<u32>> proj(r.m);
    for (u32 t = 0; t < r.m; ++t) proj[t] = pr.apply(pows[t]);
    Mat rows(F, spec.k * l, r.points * l);
    for (u32 i = 0; i < spec.k; ++i) {
        for (u32 j = 0; j < l; ++j) {
            for (u32 u = 0; u < r.points; ++u) {
                const std::vector<u32>& block = proj[(j + u64(u) * i) % r.m];
                for (u32 t = 0; t < l; ++t)
                    rows.set(i * l + j, u * l + t, block[t]);
            }
        }
    }
    LinearCode C = LinearCode::from_rows(F, rows);
    C.set_block_len(l);
    if (r.full && !C.is_quasi_cyclic(l))
        throw std::logic_error("full-point evaluation code must be quasi-cyclic");
    u64 kd = pr.kernel_dim();
    u64 loss = u64(r.points) * kd;
    u64 kl = u64(spec.k) * l;
    if (kl > loss && C.k() < kl - loss)
        throw std::logic_error("dimension below kl - points * dim ker pi");
    return EvalCode{std::move(C), spec.root, r.m, r.points, spec.k, l, r.full, spec.proj};
}

EvalCode eval_code_shortened(const EvalSpec& spec, u32 points) {
    EvalSpec s = spec;
    s.points = points;
    return eval_code_build(s);
}

bool mds_like_bound_check(const EvalCode& C, u64 budget) {
    switch (C.proj.kind) {
        case ProjectionSpec::Kind::Row:
        case ProjectionSpec::Kind::Col:
        case ProjectionSpec::Kind::Psi:
            break;
        default:
            throw std::invalid_argument("projection is not one of the injective kinds");
    }
    DistanceReport r = min_distance_enum(C.code, 1, budget);
    if (!r.found) return true;  // zero code vacuously
    return r.block.value() >= C.points - C.k + 1;
}

}  // namespace qcblock
