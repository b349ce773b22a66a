#include "qcblock/matpoly.hpp"

#include <stdexcept>

namespace qcblock {

MatPoly::MatPoly(const Field& F, u32 r, u32 c) : F_(&F), r_(r), c_(c) {}

MatPoly MatPoly::constant(const Mat& c0) {
    MatPoly p(c0.field(), c0.rows(), c0.cols());
    if (!c0.is_zero()) p.coef_.push_back(c0);
    return p;
}

MatPoly MatPoly::from_coeffs(const Field& F, std::vector<Mat> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("from_coeffs: no coefficients");
    for (const Mat& m : coeffs)
        if (&m.field() != &F || m.rows() != coeffs[0].rows() || m.cols() != coeffs[0].cols())
            throw std::invalid_argument("from_coeffs: shape/field mismatch");
    MatPoly p(F, coeffs[0].rows(), coeffs[0].cols());
    p.coef_ = std::move(coeffs);
    p.trim();
    return p;
}

MatPoly MatPoly::one_minus_x(const Mat& B) {
    if (!B.square()) throw std::invalid_argument("one_minus_x: matrix not square");
    return from_coeffs(B.field(), {Mat::identity(B.field(), B.rows()), -B});
}

Mat MatPoly::coeff(u32 i) const {
    if (i < coef_.size()) return coef_[i];
    return Mat(*F_, r_, c_);
}

void MatPoly::set_coeff(u32 i, const Mat& v) {
    if (&v.field() != F_ || v.rows() != r_ || v.cols() != c_)
        throw std::invalid_argument("set_coeff: shape/field mismatch");
    if (i >= coef_.size()) coef_.resize(i + 1, Mat(*F_, r_, c_));
    coef_[i] = v;
    trim();
}

void MatPoly::trim() {
    while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

void MatPoly::check_compatible(const MatPoly& o) const {
    if (F_ != o.F_ || r_ != o.r_ || c_ != o.c_)
        throw std::invalid_argument("matpoly shape/field mismatch");
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
    check_compatible(o);
    MatPoly p(*F_, r_, c_);
    std::size_t n = std::max(coef_.size(), o.coef_.size());
    for (std::size_t i = 0; i < n; ++i) p.coef_.push_back(coeff(u32(i)) + o.coeff(u32(i)));
    p.trim();
    return p;
}

MatPoly MatPoly::operator-(const MatPoly& o) const {
    check_compatible(o);
    MatPoly p(*F_, r_, c_);
    std::size_t n = std::max(coef_.size(), o.coef_.size());
    for (std::size_t i = 0; i < n; ++i) p.coef_.push_back(coeff(u32(i)) - o.coeff(u32(i)));
    p.trim();
    return p;
}

MatPoly MatPoly::operator*(const MatPoly& o) const {
    if (F_ != o.F_ || c_ != o.r_) throw std::invalid_argument("matpoly mul: shape/field mismatch");
    MatPoly p(*F_, r_, o.c_);
    if (coef_.empty() || o.coef_.empty()) return p;
    p.coef_.assign(coef_.size() + o.coef_.size() - 1, Mat(*F_, r_, o.c_));
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coef_.size(); ++j)
            p.coef_[i + j] = p.coef_[i + j] + coef_[i] * o.coef_[j];
    }
    p.trim();
    return p;
}

MatPoly MatPoly::scaled_left(const Mat& m) const {
    if (&m.field() != F_ || m.cols() != r_) throw std::invalid_argument("scaled_left: shape mismatch");
    MatPoly p(*F_, m.rows(), c_);
    for (const Mat& ci : coef_) p.coef_.push_back(m * ci);
    p.trim();
    return p;
}

MatPoly MatPoly::scaled_right(const Mat& m) const {
    if (&m.field() != F_ || m.rows() != c_) throw std::invalid_argument("scaled_right: shape mismatch");
    MatPoly p(*F_, r_, m.cols());
    for (const Mat& ci : coef_) p.coef_.push_back(ci * m);
    p.trim();
    return p;
}

MatPoly MatPoly::scaled(u32 a) const {
    MatPoly p(*F_, r_, c_);
    for (const Mat& ci : coef_) p.coef_.push_back(ci.scaled(a));
    p.trim();
    return p;
}

MatPoly MatPoly::shift(u32 k) const {
    MatPoly p(*F_, r_, c_);
    if (coef_.empty()) return p;
    p.coef_.assign(k, Mat(*F_, r_, c_));
    p.coef_.insert(p.coef_.end(), coef_.begin(), coef_.end());
    return p;
}

MatPoly MatPoly::truncate(u32 order) const {
    MatPoly p(*F_, r_, c_);
    for (std::size_t i = 0; i < coef_.size() && i < order; ++i) p.coef_.push_back(coef_[i]);
    p.trim();
    return p;
}

MatPoly MatPoly::mod_cyclic(u32 m) const {
    if (m == 0) throw std::invalid_argument("mod_cyclic: m == 0");
    MatPoly p(*F_, r_, c_);
    p.coef_.assign(std::min<std::size_t>(m, coef_.size()), Mat(*F_, r_, c_));
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        std::size_t k = i % m;
        if (k >= p.coef_.size()) p.coef_.resize(k + 1, Mat(*F_, r_, c_));
        p.coef_[k] = p.coef_[k] + coef_[i];
    }
    p.trim();
    return p;
}

MatPoly MatPoly::reciprocal(u32 k) const {
    if (int(k) < deg()) throw std::invalid_argument("reciprocal: window below degree");
    MatPoly p(*F_, r_, c_);
    p.coef_.assign(k + 1, Mat(*F_, r_, c_));
    for (u32 i = 0; i <= k; ++i) p.coef_[i] = coeff(k - i);
    p.trim();
    return p;
}

MatPoly MatPoly::transpose_coeffs() const {
    MatPoly p(*F_, c_, r_);
    for (const Mat& ci : coef_) p.coef_.push_back(ci.transpose());
    return p;
}

Mat MatPoly::eval_left(const Mat& B) const {
    if (&B.field() != F_ || !B.square() || B.cols() != r_)
        throw std::invalid_argument("eval_left: shape mismatch");
    Mat acc(*F_, r_, c_);
    // Horner from the top: acc = B * acc + C_i
    for (std::size_t i = coef_.size(); i-- > 0;) acc = B * acc + coef_[i];
    return acc;
}

Mat MatPoly::eval_right(const Mat& B) const {
    if (&B.field() != F_ || !B.square() || B.rows() != c_)
        throw std::invalid_argument("eval_right: shape mismatch");
    Mat acc(*F_, r_, c_);
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * B + coef_[i];
    return acc;
}

MatPoly MatPoly::series_inverse(u32 order) const {
    if (r_ != c_) throw std::invalid_argument("series_inverse: coefficients not square");
    if (coef_.empty()) throw std::domain_error("series_inverse: zero polynomial");
    Mat inv0 = coef_[0].inverse();  // throws std::domain_error if singular
    MatPoly q(*F_, r_, c_);
    if (order == 0) return q;
    q.coef_.assign(order, Mat(*F_, r_, c_));
    q.coef_[0] = inv0;
    for (u32 k = 1; k < order; ++k) {
        // sum_{i=1..k} C_i Q_{k-i} must cancel: Q_k = -C_0^{-1} sum.
        Mat s(*F_, r_, c_);
        for (u32 i = 1; i <= k && i < coef_.size(); ++i) s = s + coef_[i] * q.coef_[k - i];
        q.coef_[k] = -(inv0 * s);
    }
    q.trim();
    return q;
}

bool MatPoly::operator==(const MatPoly& o) const {
    return F_ == o.F_ && r_ == o.r_ && c_ == o.c_ && coef_ == o.coef_;
}

}  // namespace qcblock
