#include "qcblock/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace qcblock {

Mat::Mat(const Field& F, u32 rows, u32 cols)
    : F_(&F), r_(rows), c_(cols), a_(std::size_t(rows) * cols, 0) {}

Mat Mat::identity(const Field& F, u32 n) { return scalar(F, n, 1); }

Mat Mat::scalar(const Field& F, u32 n, u32 a) {
    Mat m(F, n, n);
    for (u32 i = 0; i < n; ++i) m.set(i, i, a);
    return m;
}

Mat Mat::from_rows(const Field& F, const std::vector<std::vector<u32>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
    u32 c = u32(rows[0].size());
    Mat m(F, u32(rows.size()), c);
    for (u32 i = 0; i < m.r_; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
        for (u32 j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Mat Mat::row_vector(const Field& F, const std::vector<u32>& v) {
    return from_rows(F, {v});
}

Mat Mat::col_vector(const Field& F, const std::vector<u32>& v) {
    Mat m(F, u32(v.size()), 1);
    for (u32 i = 0; i < m.r_; ++i) m.set(i, 0, v[i]);
    return m;
}

Mat Mat::companion(const Field& F, const std::vector<u32>& monic_coeffs) {
    if (monic_coeffs.size() < 2 || monic_coeffs.back() != 1)
        throw std::invalid_argument("companion: polynomial must be monic of degree >= 1");
    u32 n = u32(monic_coeffs.size()) - 1;
    Mat m(F, n, n);
    for (u32 i = 1; i < n; ++i) m.set(i, i - 1, 1);
    for (u32 i = 0; i < n; ++i) m.set(i, n - 1, F.neg(monic_coeffs[i]));
    return m;
}

Mat Mat::vstack(const std::vector<Mat>& parts) {
    if (parts.empty()) throw std::invalid_argument("vstack: no parts");
    u32 c = parts[0].c_, r = 0;
    for (const Mat& p : parts) {
        if (p.F_ != parts[0].F_ || p.c_ != c) throw std::invalid_argument("vstack: shape/field mismatch");
        r += p.r_;
    }
    Mat m(*parts[0].F_, r, c);
    u32 i0 = 0;
    for (const Mat& p : parts) {
        for (u32 i = 0; i < p.r_; ++i)
            for (u32 j = 0; j < c; ++j) m.set(i0 + i, j, p.at(i, j));
        i0 += p.r_;
    }
    return m;
}

Mat Mat::hstack(const std::vector<Mat>& parts) {
    if (parts.empty()) throw std::invalid_argument("hstack: no parts");
    u32 r = parts[0].r_, c = 0;
    for (const Mat& p : parts) {
        if (p.F_ != parts[0].F_ || p.r_ != r) throw std::invalid_argument("hstack: shape/field mismatch");
        c += p.c_;
    }
    Mat m(*parts[0].F_, r, c);
    u32 j0 = 0;
    for (const Mat& p : parts) {
        for (u32 i = 0; i < r; ++i)
            for (u32 j = 0; j < p.c_; ++j) m.set(i, j0 + j, p.at(i, j));
        j0 += p.c_;
    }
    return m;
}

std::vector<u32> Mat::row(u32 i) const {
    return std::vector<u32>(a_.begin() + std::size_t(i) * c_, a_.begin() + std::size_t(i + 1) * c_);
}

std::vector<u32> Mat::col(u32 j) const {
    std::vector<u32> v(r_);
    for (u32 i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_row(u32 i, const std::vector<u32>& v) {
    if (v.size() != c_) throw std::invalid_argument("set_row: length mismatch");
    for (u32 j = 0; j < c_; ++j) set(i, j, v[j]);
}

Mat Mat::block(u32 i0, u32 j0, u32 nrows, u32 ncols) const {
    if (i0 + nrows > r_ || j0 + ncols > c_) throw std::invalid_argument("block: out of range");
    Mat m(*F_, nrows, ncols);
    for (u32 i = 0; i < nrows; ++i)
        for (u32 j = 0; j < ncols; ++j) m.set(i, j, at(i0 + i, j0 + j));
    return m;
}

bool Mat::is_zero() const {
    for (u32 v : a_)
        if (v) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (u32 i = 0; i < r_; ++i)
        for (u32 j = 0; j < c_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

void Mat::check_same_field(const Mat& o) const {
    if (F_ != o.F_) throw std::invalid_argument("matrix field mismatch");
}

Mat Mat::operator+(const Mat& o) const {
    check_same_field(o);
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("add: shape mismatch");
    Mat m(*F_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = F_->add(a_[k], o.a_[k]);
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    check_same_field(o);
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("sub: shape mismatch");
    Mat m(*F_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = F_->sub(a_[k], o.a_[k]);
    return m;
}

Mat Mat::operator-() const {
    Mat m(*F_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = F_->neg(a_[k]);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    check_same_field(o);
    if (c_ != o.r_) throw std::invalid_argument("mul: inner dimension mismatch");
    Mat m(*F_, r_, o.c_);
    for (u32 i = 0; i < r_; ++i)
        for (u32 k = 0; k < c_; ++k) {
            u32 aik = at(i, k);
            if (!aik) continue;
            for (u32 j = 0; j < o.c_; ++j) {
                u32 b = o.at(k, j);
                if (b) m.set(i, j, F_->add(m.at(i, j), F_->mul(aik, b)));
            }
        }
    return m;
}

Mat Mat::scaled(u32 a) const {
    Mat m(*F_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = F_->mul(a, a_[k]);
    return m;
}

Mat Mat::transpose() const {
    Mat m(*F_, c_, r_);
    for (u32 i = 0; i < r_; ++i)
        for (u32 j = 0; j < c_; ++j) m.set(j, i, at(i, j));
    return m;
}

Mat Mat::pow(i64 e) const {
    if (!square()) throw std::invalid_argument("pow: matrix not square");
    if (e < 0) return inverse().pow(-e);
    Mat result = identity(*F_, r_);
    Mat base = *this;
    u64 n = u64(e);
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::vector<u32> Mat::mul_vec(const std::vector<u32>& x) const {
    if (x.size() != c_) throw std::invalid_argument("mul_vec: length mismatch");
    std::vector<u32> y(r_, 0);
    for (u32 i = 0; i < r_; ++i)
        for (u32 j = 0; j < c_; ++j) {
            u32 aij = at(i, j);
            if (aij && x[j]) y[i] = F_->add(y[i], F_->mul(aij, x[j]));
        }
    return y;
}

std::vector<u32> Mat::vec_mul(const std::vector<u32>& x) const {
    if (x.size() != r_) throw std::invalid_argument("vec_mul: length mismatch");
    std::vector<u32> y(c_, 0);
    for (u32 i = 0; i < r_; ++i) {
        if (!x[i]) continue;
        for (u32 j = 0; j < c_; ++j) {
            u32 aij = at(i, j);
            if (aij) y[j] = F_->add(y[j], F_->mul(x[i], aij));
        }
    }
    return y;
}

bool Mat::operator==(const Mat& o) const {
    return F_ == o.F_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

MatRref Mat::rref() const {
    MatRref out{*this, {}, 0};
    Mat& m = out.mat;
    u32 pr = 0;  // next pivot row
    for (u32 pc = 0; pc < c_ && pr < r_; ++pc) {
        u32 sel = pr;
        while (sel < r_ && m.at(sel, pc) == 0) ++sel;
        if (sel == r_) continue;
        if (sel != pr)
            for (u32 j = 0; j < c_; ++j) {
                u32 t = m.at(pr, j);
                m.set(pr, j, m.at(sel, j));
                m.set(sel, j, t);
            }
        u32 piv_inv = F_->inv(m.at(pr, pc));
        for (u32 j = pc; j < c_; ++j) m.set(pr, j, F_->mul(piv_inv, m.at(pr, j)));
        for (u32 i = 0; i < r_; ++i) {
            if (i == pr) continue;
            u32 f = m.at(i, pc);
            if (!f) continue;
            for (u32 j = pc; j < c_; ++j)
                m.set(i, j, F_->sub(m.at(i, j), F_->mul(f, m.at(pr, j))));
        }
        out.pivot_cols.push_back(pc);
        ++pr;
    }
    out.rank = pr;
    return out;
}

u32 Mat::rank() const { return rref().rank; }

u32 Mat::det() const {
    if (!square()) throw std::invalid_argument("det: matrix not square");
    Mat m = *this;
    u32 det = 1;
    for (u32 pc = 0; pc < c_; ++pc) {
        u32 sel = pc;
        while (sel < r_ && m.at(sel, pc) == 0) ++sel;
        if (sel == r_) return 0;
        if (sel != pc) {
            for (u32 j = 0; j < c_; ++j) {
                u32 t = m.at(pc, j);
                m.set(pc, j, m.at(sel, j));
                m.set(sel, j, t);
            }
            det = F_->neg(det);
        }
        u32 piv = m.at(pc, pc);
        det = F_->mul(det, piv);
        u32 piv_inv = F_->inv(piv);
        for (u32 i = pc + 1; i < r_; ++i) {
            u32 f = m.at(i, pc);
            if (!f) continue;
            u32 fp = F_->mul(f, piv_inv);
            for (u32 j = pc; j < c_; ++j)
                m.set(i, j, F_->sub(m.at(i, j), F_->mul(fp, m.at(pc, j))));
        }
    }
    return det;
}

Mat Mat::inverse() const {
    if (!square()) throw std::invalid_argument("inverse: matrix not square");
    Mat aug = hstack({*this, identity(*F_, r_)});
    MatRref rr = aug.rref();
    if (rr.rank < r_ || rr.pivot_cols.back() >= r_)
        throw std::domain_error("inverse: singular matrix");
    return rr.mat.col_range(r_, r_);
}

Mat Mat::nullspace() const {
    MatRref rr = rref();
    u32 nfree = c_ - rr.rank;
    Mat basis(*F_, nfree, c_);
    std::vector<int> pivot_row_of_col(c_, -1);
    for (u32 i = 0; i < rr.rank; ++i) pivot_row_of_col[rr.pivot_cols[i]] = int(i);
    u32 b = 0;
    for (u32 j = 0; j < c_; ++j) {
        if (pivot_row_of_col[j] >= 0) continue;
        basis.set(b, j, 1);
        for (u32 i = 0; i < rr.rank; ++i)
            basis.set(b, rr.pivot_cols[i], F_->neg(rr.mat.at(i, j)));
        ++b;
    }
    return basis;
}

std::optional<std::vector<u32>> Mat::solve(const std::vector<u32>& b) const {
    if (b.size() != r_) throw std::invalid_argument("solve: length mismatch");
    Mat aug = hstack({*this, col_vector(*F_, b)});
    MatRref rr = aug.rref();
    if (rr.rank > 0 && rr.pivot_cols.back() == c_) return std::nullopt;
    std::vector<u32> x(c_, 0);
    for (u32 i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.mat.at(i, c_);
    return x;
}

Mat Mat::canonical_rowspace() const {
    MatRref rr = rref();
    if (rr.rank == 0) return Mat(*F_, 0, c_);
    return rr.mat.row_range(0, rr.rank);
}

std::string Mat::to_string() const {
    std::ostringstream os;
    for (u32 i = 0; i < r_; ++i) {
        for (u32 j = 0; j < c_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

u32 vec_weight(const std::vector<u32>& v) {
    u32 w = 0;
    for (u32 x : v)
        if (x) ++w;
    return w;
}

std::vector<u32> vec_add(const Field& F, const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    std::vector<u32> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

std::vector<u32> vec_sub(const Field& F, const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    std::vector<u32> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

std::vector<u32> vec_scale(const Field& F, u32 a, const std::vector<u32>& v) {
    std::vector<u32> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = F.mul(a, v[i]);
    return r;
}

}  // namespace qcblock
