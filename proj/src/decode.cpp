#include "qcblock/decode.hpp"

#include <optional>
#include <stdexcept>

namespace qcblock {

namespace {

bool next_combination(std::vector<u32>& c, u32 m) {
    u32 w = static_cast<u32>(c.size());
    for (u32 i = w; i-- > 0;) {
        if (c[i] < m - (w - i)) {
            ++c[i];
            for (u32 j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

enum class TryOutcome { None, One, Many };

struct TryResult {
    TryOutcome outcome;
    std::vector<u32> error;
};

}  // namespace

MatPoly error_locator(const std::vector<Mat>& pows, const std::vector<u32>& W) {
    const Field& F = pows[0].field();
    u32 l = pows[0].rows();
    MatPoly acc = MatPoly::constant(Mat::identity(F, l));
    for (u32 i : W) acc = acc * MatPoly::one_minus_x(pows[i % pows.size()]);
    return acc;
}

MatPoly error_evaluator(const std::vector<Mat>& pows, const std::vector<u32>& W,
                        const std::vector<Mat>& blocks) {
    if (W.size() != blocks.size())
        throw std::invalid_argument("error_evaluator: support/blocks size mismatch");
    const Field& F = pows[0].field();
    u32 l = pows[0].rows();
    MatPoly acc(F, l, 1);
    for (size_t t = 0; t < W.size(); ++t) {
        MatPoly term = MatPoly::constant(pows[W[t] % pows.size()]);
        for (size_t j = 0; j < W.size(); ++j)
            if (j != t) term = term * MatPoly::one_minus_x(pows[W[j] % pows.size()]);
        acc = acc + term * MatPoly::constant(blocks[t]);
    }
    return acc;
}

bool key_equation_holds(const MatPoly& locator, const MatPoly& syndrome,
                        const MatPoly& evaluator, u32 order) {
    MatPoly diff = locator * syndrome - evaluator;
    for (u32 c = 0; c < order; ++c)
        if (!diff.coeff(c).is_zero()) return false;
    return true;
}

std::vector<u32> chien_search(const MatPoly& locator, const std::vector<Mat>& pows) {
    u32 m = static_cast<u32>(pows.size());
    std::vector<u32> roots;
    for (u32 i = 0; i < m; ++i)
        if (locator.eval_right(pows[(m - i) % m]).det() == 0) roots.push_back(i);
    return roots;
}

std::vector<Mat> error_values(const std::vector<Mat>& pows, const std::vector<u32>& W,
                              const MatPoly& evaluator) {
    const Field& F = pows[0].field();
    u32 l = pows[0].rows();
    i64 m = static_cast<i64>(pows.size());
    i64 w = static_cast<i64>(W.size());
    std::vector<Mat> out;
    out.reserve(W.size());
    for (u32 i : W) {
        Mat pre = Mat::identity(F, l);
        for (u32 j : W)
            if (j != i) pre = pre * (pows[i] - pows[j]);
        i64 exp = ((static_cast<i64>(i) * (w - 2)) % m + m) % m;
        Mat val = pre.inverse() * pows[exp] *
                  evaluator.eval_left(pows[(pows.size() - i) % pows.size()]);
        out.push_back(std::move(val));
    }
    return out;
}

namespace {

// Solve sum_{j in W} A^{ij} e_j = S_i (i = 1..delta-1) for the error blocks
// as an Fq-linear system; Many marks a consistent but underdetermined
// system, which no unique decoding can use.
TryResult solve_support(const QbchCode& Q, const std::vector<Mat>& pows,
                        const MatPoly& S, const std::vector<u32>& W) {
    const Field& Fq = *Q.Fq;
    const Embedding& emb = Embedding::get(Fq, *Q.Fqs);
    u32 l = Q.l, s = Q.s, delta = Q.delta;
    u32 w = static_cast<u32>(W.size());
    u32 rows = (delta - 1) * l * s, cols = w * l;
    Mat M(Fq, rows, cols);
    std::vector<u32> b(rows, 0);
    for (u32 i = 1; i < delta; ++i) {
        for (u32 jt = 0; jt < w; ++jt) {
            const Mat& P = pows[static_cast<u64>(i) * W[jt] % Q.m];
            for (u32 t = 0; t < l; ++t)
                for (u32 u = 0; u < l; ++u) {
                    std::vector<u32> crd = emb.coords(P.at(t, u));
                    for (u32 sig = 0; sig < s; ++sig)
                        M.set(((i - 1) * l + t) * s + sig, jt * l + u, crd[sig]);
                }
        }
        for (u32 t = 0; t < l; ++t) {
            std::vector<u32> crd = emb.coords(S.coeff(i - 1).at(t, 0));
            for (u32 sig = 0; sig < s; ++sig) b[((i - 1) * l + t) * s + sig] = crd[sig];
        }
    }
    std::optional<std::vector<u32>> x = M.solve(b);
    if (!x) return {TryOutcome::None, {}};
    if (M.rank() < cols) return {TryOutcome::Many, {}};
    std::vector<u32> e(static_cast<size_t>(Q.m) * l, 0);
    for (u32 jt = 0; jt < w; ++jt) {
        bool nz = false;
        for (u32 u = 0; u < l; ++u) {
            e[W[jt] * l + u] = (*x)[jt * l + u];
            nz = nz || (*x)[jt * l + u] != 0;
        }
        if (!nz) return {TryOutcome::None, {}};  // true support is smaller
    }
    return {TryOutcome::One, std::move(e)};
}

TryResult solve_key_equation(const QbchCode& Q, const std::vector<Mat>& pows,
                             const MatPoly& S, const std::vector<u32>& W) {
    const Field& Fq = *Q.Fq;
    const Embedding& emb = Embedding::get(Fq, *Q.Fqs);
    u32 l = Q.l, delta = Q.delta;
    u32 w = static_cast<u32>(W.size());
    MatPoly prod = error_locator(pows, W) * S;
    for (u32 c = w; c + 1 < delta; ++c)
        if (!prod.coeff(c).is_zero()) return {TryOutcome::None, {}};
    std::vector<Mat> lcoeffs;
    for (u32 c = 0; c < w; ++c) lcoeffs.push_back(prod.coeff(c));
    MatPoly L = MatPoly::from_coeffs(*Q.Fqs, lcoeffs);
    std::vector<Mat> vals = error_values(pows, W, L);

    std::vector<u32> e(static_cast<size_t>(Q.m) * l, 0);
    bool clean = true;
    for (u32 jt = 0; jt < w && clean; ++jt) {
        bool nz = false;
        for (u32 u = 0; u < l; ++u) {
            std::optional<u32> pre = emb.preimage(vals[jt].at(u, 0));
            if (!pre) { clean = false; break; }
            e[W[jt] * l + u] = *pre;
            nz = nz || *pre != 0;
        }
        if (!nz) clean = false;
    }
    if (clean && syndrome_series(pows, Fq, e, delta - 1) == S)
        return {TryOutcome::One, std::move(e)};
    // The closed form assumes the true support; fall back to the direct
    // solve for this W before giving up on it.
    return solve_support(Q, pows, S, W);
}

}  // namespace

DecodeResult qbch_decode(const QbchCode& Q, const std::vector<u32>& y,
                         DecodeStrategy strategy, u32 max_weight) {
    const Field& Fq = *Q.Fq;
    u32 l = Q.l, m = Q.m;
    if (y.size() != static_cast<size_t>(m) * l)
        throw std::invalid_argument("qbch_decode: wrong length");
    u32 t = max_weight ? max_weight : (Q.delta - 1) / 2;
    std::vector<Mat> pows = root_powers(Q.root, m);
    MatPoly S = syndrome_series(pows, Fq, y, Q.delta - 1);
    if (S.is_zero())
        return {true, std::vector<u32>(y.size(), 0), y, 0, ""};

    for (u32 w = 1; w <= t && w <= m; ++w) {
        std::vector<std::vector<u32>> found;
        std::vector<u32> W(w);
        for (u32 i = 0; i < w; ++i) W[i] = i;
        do {
            TryResult tr = strategy == DecodeStrategy::Support
                               ? solve_support(Q, pows, S, W)
                               : solve_key_equation(Q, pows, S, W);
            if (tr.outcome == TryOutcome::Many)
                return {false, {}, {}, 0, "ambiguous: underdetermined support " +
                                              std::to_string(w) + " system"};
            if (tr.outcome == TryOutcome::One) {
                bool dup = false;
                for (const auto& f : found) dup = dup || f == tr.error;
                if (!dup) found.push_back(std::move(tr.error));
            }
        } while (next_combination(W, m));
        if (found.size() > 1)
            return {false, {}, {}, 0,
                    "ambiguous: " + std::to_string(found.size()) + " weight-" +
                        std::to_string(w) + " candidates"};
        if (found.size() == 1) {
            std::vector<u32> e = std::move(found[0]);
            std::vector<u32> c(y.size());
            for (size_t i = 0; i < y.size(); ++i) c[i] = Fq.sub(y[i], e[i]);
            return {true, std::move(e), std::move(c), w, ""};
        }
    }
    return {false, {}, {}, 0,
            "no correctable error within weight " + std::to_string(t)};
}

}  // namespace qcblock
