#include "qcblock/qccode.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcblock {

namespace {

// Incremental reduced row echelon form; rows stay monic at their pivots and
// fully reduced against each other, sorted by pivot column.
class RrefAccumulator {
public:
    explicit RrefAccumulator(const Field& F, u32 cols) : F_(&F), cols_(cols) {}

    u32 rank() const { return static_cast<u32>(rows_.size()); }
    const std::vector<std::vector<u32>>& rows() const { return rows_; }
    const std::vector<u32>& pivots() const { return pivots_; }

    std::vector<u32> reduce(std::vector<u32> r) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            u32 c = r[pivots_[i]];
            if (c == 0) continue;
            for (u32 j = pivots_[i]; j < cols_; ++j)
                r[j] = F_->sub(r[j], F_->mul(c, rows_[i][j]));
        }
        return r;
    }

    // Returns false (acc unchanged) when the row is in the current span.
    bool add(const std::vector<u32>& row) {
        std::vector<u32> r = reduce(row);
        u32 p = cols_;
        for (u32 j = 0; j < cols_; ++j)
            if (r[j] != 0) { p = j; break; }
        if (p == cols_) return false;
        u32 inv = F_->inv(r[p]);
        for (u32 j = p; j < cols_; ++j) r[j] = F_->mul(r[j], inv);
        for (size_t i = 0; i < rows_.size(); ++i) {
            u32 c = rows_[i][p];
            if (c == 0) continue;
            for (u32 j = p; j < cols_; ++j)
                rows_[i][j] = F_->sub(rows_[i][j], F_->mul(c, r[j]));
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(r));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    Mat to_mat() const {
        Mat out(*F_, rank(), cols_);
        for (u32 i = 0; i < rank(); ++i) out.set_row(i, rows_[i]);
        return out;
    }

private:
    const Field* F_;
    u32 cols_;
    std::vector<std::vector<u32>> rows_;
    std::vector<u32> pivots_;
};

u32 first_nonzero_block(const std::vector<u32>& x, u32 l) {
    for (u32 i = 0; i * l < x.size(); ++i)
        for (u32 j = 0; j < l; ++j)
            if (x[i * l + j] != 0) return i;
    return static_cast<u32>(x.size() / l);
}

u32 first_nonzero_pos(const std::vector<u32>& x) {
    for (u32 j = 0; j < x.size(); ++j)
        if (x[j] != 0) return j;
    return static_cast<u32>(x.size());
}

}  // namespace

std::vector<u32> cyclic_shift(const std::vector<u32>& x, u64 steps) {
    if (x.empty()) return x;
    u64 s = steps % x.size();
    std::vector<u32> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = x[(i + s) % x.size()];
    return y;
}

u32 block_weight(const std::vector<u32>& x, u32 l) {
    if (l == 0 || x.size() % l != 0)
        throw std::invalid_argument("block_weight: length not a multiple of l");
    u32 w = 0;
    for (u32 i = 0; i * l < x.size(); ++i)
        for (u32 j = 0; j < l; ++j)
            if (x[i * l + j] != 0) { ++w; break; }
    return w;
}

LinearCode::LinearCode(const Field& F, u32 n, Mat gen, Mat canon, std::vector<u32> pivots)
    : F_(&F), n_(n), k_(canon.rows()), gen_(std::move(gen)), canon_(std::move(canon)),
      canon_pivots_(std::move(pivots)) {}

LinearCode LinearCode::from_rows(const Field& F, const Mat& rows) {
    if (&rows.field() != &F)
        throw std::invalid_argument("LinearCode::from_rows: field mismatch");
    u32 n = rows.cols();
    RrefAccumulator acc(F, n);
    std::vector<std::vector<u32>> kept;
    for (u32 i = 0; i < rows.rows(); ++i) {
        std::vector<u32> r = rows.row(i);
        if (acc.add(r)) kept.push_back(std::move(r));
    }
    Mat gen(F, static_cast<u32>(kept.size()), n);
    for (u32 i = 0; i < kept.size(); ++i) gen.set_row(i, kept[i]);
    return LinearCode(F, n, std::move(gen), acc.to_mat(), acc.pivots());
}

LinearCode LinearCode::zero_code(const Field& F, u32 n) {
    return LinearCode(F, n, Mat(F, 0, n), Mat(F, 0, n), {});
}

LinearCode LinearCode::full_code(const Field& F, u32 n) {
    return from_rows(F, Mat::identity(F, n));
}

u32 LinearCode::blocks() const {
    if (!block_l_) throw std::logic_error("LinearCode::blocks: block length unset");
    return n_ / *block_l_;
}

void LinearCode::set_block_len(u32 l) {
    if (l == 0 || n_ % l != 0)
        throw std::invalid_argument("LinearCode::set_block_len: l must divide n");
    block_l_ = l;
}

std::vector<u32> LinearCode::encode(const std::vector<u32>& message) const {
    return gen_.vec_mul(message);
}

bool LinearCode::contains(const std::vector<u32>& word) const {
    if (word.size() != n_)
        throw std::invalid_argument("LinearCode::contains: wrong length");
    std::vector<u32> r = word;
    for (u32 i = 0; i < k_; ++i) {
        u32 c = r[canon_pivots_[i]];
        if (c == 0) continue;
        for (u32 j = canon_pivots_[i]; j < n_; ++j)
            r[j] = F_->sub(r[j], F_->mul(c, canon_.at(i, j)));
    }
    for (u32 j = 0; j < n_; ++j)
        if (r[j] != 0) return false;
    return true;
}

bool LinearCode::operator==(const LinearCode& o) const {
    return F_ == o.F_ && n_ == o.n_ && canon_ == o.canon_;
}

LinearCode LinearCode::dual() const {
    LinearCode d = from_rows(*F_, gen_.nullspace());
    if (block_l_) d.block_l_ = block_l_;
    return d;
}

bool LinearCode::stable_under_shift(u32 steps) const {
    for (u32 i = 0; i < gen_.rows(); ++i)
        if (!contains(cyclic_shift(gen_.row(i), steps))) return false;
    return true;
}

u32 block_rank(const LinearCode& C, u32 l) {
    if (l == 0 || C.n() % l != 0)
        throw std::invalid_argument("block_rank: l must divide n");
    if (C.k() == 0) return 0;
    u32 m = C.n() / l;
    u32 r = C.generator().col_range(0, l).rank();
    for (u32 i = 1; i < m; ++i)
        if (C.generator().col_range(i * l, l).rank() != r)
            throw std::invalid_argument("block_rank: blocks disagree (code is not quasi-cyclic)");
    return r;
}

QcGenerators qc_generator_basis(const LinearCode& C, u32 l) {
    if (l == 0 || C.n() % l != 0)
        throw std::invalid_argument("qc_generator_basis: l must divide n");
    const Field& F = C.field();
    u32 n = C.n(), k = C.k();
    QcGenerators out{{}, {}, Mat(F, 0, n), {}};
    if (k == 0) return out;

    // Rows of the canonical form sorted by pivot, so first indices ascend.
    const Mat& G = C.canonical();
    std::vector<std::vector<u32>> rows(k);
    std::vector<u32> firsts(k);
    for (u32 i = 0; i < k; ++i) {
        rows[i] = G.row(i);
        firsts[i] = first_nonzero_block(rows[i], l);
    }
    u32 M = firsts[k - 1];
    std::vector<std::vector<u32>> bucket(M + 1);
    for (u32 i = 0; i < k; ++i) bucket[firsts[i]].push_back(i);

    // Sweep buckets from the last block index down.  A generator accepted at
    // block j keeps the same leading block after each shift by l, so the
    // leading-block projections of everything carried into bucket j are
    // exactly the projections of the generators accepted so far.  Rows within
    // a bucket are taken bottom-up; top-down provably fails to reproduce the
    // reference basis of the worked example.
    RrefAccumulator proj(F, l);
    for (u32 jj = M + 1; jj-- > 0;) {
        for (size_t t = bucket[jj].size(); t-- > 0;) {
            u32 idx = bucket[jj][t];
            std::vector<u32> lead(rows[idx].begin() + jj * l,
                                  rows[idx].begin() + (jj + 1) * l);
            if (proj.add(lead)) {
                out.gens.push_back(rows[idx]);
                out.firsts.push_back(jj);
            }
        }
    }

    std::vector<u32> order(out.gens.size());
    for (u32 i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](u32 a, u32 b) {
        if (out.firsts[a] != out.firsts[b]) return out.firsts[a] < out.firsts[b];
        return first_nonzero_pos(out.gens[a]) < first_nonzero_pos(out.gens[b]);
    });
    std::vector<std::vector<u32>> gens;
    std::vector<u32> gfirsts;
    for (u32 i : order) {
        gens.push_back(out.gens[i]);
        gfirsts.push_back(out.firsts[i]);
    }
    out.gens = std::move(gens);
    out.firsts = std::move(gfirsts);

    u64 total = 0;
    for (u32 f : out.firsts) total += f + 1;
    if (total != k)
        throw std::invalid_argument("qc_generator_basis: code is not quasi-cyclic");

    u32 maxf = *std::max_element(out.firsts.begin(), out.firsts.end());
    RrefAccumulator full(F, n);
    std::vector<std::vector<u32>> basis_rows;
    for (u32 j = 0; j <= maxf; ++j)
        for (u32 i = 0; i < out.gens.size(); ++i) {
            if (out.firsts[i] < j) continue;
            basis_rows.push_back(cyclic_shift(out.gens[i], static_cast<u64>(j) * l));
            out.schedule.emplace_back(i, j);
            if (!full.add(basis_rows.back()))
                throw std::invalid_argument("qc_generator_basis: code is not quasi-cyclic");
        }
    out.basis = Mat(F, static_cast<u32>(basis_rows.size()), n);
    for (u32 i = 0; i < basis_rows.size(); ++i) out.basis.set_row(i, basis_rows[i]);
    return out;
}

QcGeneratorPoly generator_polynomial(const LinearCode& C, u32 l) {
    QcGeneratorPoly out{MatPoly(C.field(), l, l), 0, qc_generator_basis(C, l)};
    u32 m = C.n() / l;
    u32 r = static_cast<u32>(out.gens.gens.size());
    if (r == 0) return out;
    std::vector<Mat> coeffs;
    coeffs.reserve(m);
    for (u32 i = 0; i < m; ++i) {
        Mat Gi(C.field(), l, l);
        for (u32 t = 0; t < r; ++t)
            for (u32 u = 0; u < l; ++u)
                Gi.set(t, u, out.gens.gens[t][i * l + u]);
        coeffs.push_back(std::move(Gi));
    }
    u32 nu = 0;
    while (nu < m && coeffs[nu].is_zero()) ++nu;
    out.nu = nu;
    coeffs.erase(coeffs.begin(), coeffs.begin() + nu);
    out.g = MatPoly::from_coeffs(C.field(), coeffs);
    return out;
}

LinearCode code_from_generator(const MatPoly& g, u32 m) {
    if (g.coeff_rows() != g.coeff_cols())
        throw std::invalid_argument("code_from_generator: coefficients must be square");
    u32 l = g.coeff_rows();
    const Field& F = g.field();
    MatPoly gm = g.mod_cyclic(m);
    Mat rows(F, m * l, m * l);
    for (u32 j = 0; j < m; ++j) {
        MatPoly p = gm.shift(j).mod_cyclic(m);
        for (u32 t = 0; t < l; ++t) {
            std::vector<u32> v(static_cast<size_t>(m) * l, 0);
            for (u32 i = 0; i < m; ++i)
                for (u32 u = 0; u < l; ++u)
                    v[i * l + u] = p.coeff(i).at(t, u);
            rows.set_row(j * l + t, v);
        }
    }
    LinearCode C = LinearCode::from_rows(F, rows);
    C.set_block_len(l);
    return C;
}

bool check_dual_identity(const MatPoly& P, const MatPoly& Q, u32 m) {
    u32 win = Q.deg() < 0 ? 0 : static_cast<u32>(Q.deg());
    MatPoly tQrev = Q.reciprocal(win).transpose_coeffs();
    return (P * tQrev).mod_cyclic(m).is_zero();
}

FoldingSpec::FoldingSpec(const Field& Fq, u32 l, std::optional<u32> alpha)
    : Fq_(&Fq), l_(l), fwd_(Field::get(Fq.p(), 1), 0, 0), inv_(Field::get(Fq.p(), 1), 0, 0) {
    if (l == 0) throw std::invalid_argument("FoldingSpec: l must be positive");
    Fql_ = &Field::get(Fq.p(), Fq.d() * l);
    emb_ = &Embedding::get(Fq, *Fql_);
    alpha_ = alpha.value_or(Fql_->x_class());
    u32 e = Fq.d();
    u32 D = e * l;
    const Field& Fp = Field::get(Fq.p(), 1);
    fwd_ = Mat(Fp, D, D);
    for (u32 i = 0; i < l; ++i) {
        u32 ai = Fql_->pow(alpha_, i);
        for (u32 t = 0; t < e; ++t) {
            u64 basis_elt = 1;
            for (u32 s = 0; s < t; ++s) basis_elt *= Fq.p();
            u32 y = Fql_->mul(emb_->map(static_cast<u32>(basis_elt)), ai);
            std::vector<u32> digits = Fql_->coeffs(y);
            for (u32 rr = 0; rr < D; ++rr) fwd_.set(rr, i * e + t, digits[rr]);
        }
    }
    try {
        inv_ = fwd_.inverse();
    } catch (const std::domain_error&) {
        throw std::invalid_argument("FoldingSpec: powers of alpha are not a basis");
    }
}

u32 FoldingSpec::fold_block(const std::vector<u32>& block) const {
    if (block.size() != l_)
        throw std::invalid_argument("FoldingSpec::fold_block: wrong length");
    u32 acc = 0, pw = Fql_->pow(alpha_, 0);
    for (u32 i = 0; i < l_; ++i) {
        acc = Fql_->add(acc, Fql_->mul(emb_->map(block[i]), pw));
        pw = Fql_->mul(pw, alpha_);
    }
    return acc;
}

std::vector<u32> FoldingSpec::unfold_element(u32 y) const {
    std::vector<u32> a = inv_.mul_vec(Fql_->coeffs(y));
    u32 e = Fq_->d();
    std::vector<u32> out(l_);
    for (u32 i = 0; i < l_; ++i)
        out[i] = Fq_->encode(std::vector<u32>(a.begin() + i * e, a.begin() + (i + 1) * e));
    return out;
}

std::vector<u32> FoldingSpec::fold(const std::vector<u32>& x) const {
    if (x.size() % l_ != 0)
        throw std::invalid_argument("FoldingSpec::fold: length not a multiple of l");
    std::vector<u32> y(x.size() / l_);
    for (size_t i = 0; i < y.size(); ++i)
        y[i] = fold_block(std::vector<u32>(x.begin() + i * l_, x.begin() + (i + 1) * l_));
    return y;
}

std::vector<u32> FoldingSpec::unfold(const std::vector<u32>& y) const {
    std::vector<u32> x;
    x.reserve(y.size() * l_);
    for (u32 v : y) {
        std::vector<u32> b = unfold_element(v);
        x.insert(x.end(), b.begin(), b.end());
    }
    return x;
}

}  // namespace qcblock
