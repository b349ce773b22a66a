#include "qcblock/distance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <thread>

namespace qcblock {

namespace {

constexpr u64 kClamp = std::numeric_limits<u64>::max();

u64 mul_clamped(u64 a, u64 b) {
    if (a != 0 && b > kClamp / a) return kClamp;
    return a * b;
}

u64 add_clamped(u64 a, u64 b) {
    if (b > kClamp - a) return kClamp;
    return a + b;
}

// 1 + q + ... + q^{k-1}, clamped.
u64 scalar_classes(u64 q, u32 k) {
    u64 s = 0;
    for (u32 i = 0; i < k; ++i) s = add_clamped(mul_clamped(s, q), 1);
    return s;
}

u64 binomial_clamped(u32 n, u32 w) {
    u64 b = 1;
    for (u32 i = 0; i < w; ++i) {
        b = mul_clamped(b, n - i);
        b /= i + 1;  // product of i+1 consecutive integers is divisible
    }
    return b;
}

// Incremental Hamming and block weight of a running codeword.
struct WeightTracker {
    const Field* F;
    u32 l;  // 0 when no block structure
    std::vector<u32> cw;
    std::vector<u32> blocknz;
    u32 w = 0;
    u32 bw = 0;

    WeightTracker(const Field& field, u32 n, u32 block_l)
        : F(&field), l(block_l), cw(n, 0), blocknz(block_l ? n / block_l : 0, 0) {}

    void add_scaled(u32 c, const std::vector<u32>& row) {
        if (c == 0) return;
        for (u32 i = 0; i < cw.size(); ++i) {
            if (row[i] == 0) continue;
            u32 was = cw[i];
            u32 now = F->add(was, F->mul(c, row[i]));
            cw[i] = now;
            if (was == 0 && now != 0) {
                ++w;
                if (l && blocknz[i / l]++ == 0) ++bw;
            } else if (was != 0 && now == 0) {
                --w;
                if (l && --blocknz[i / l] == 0) --bw;
            }
        }
    }
};

struct LayerBest {
    u32 w = std::numeric_limits<u32>::max();
    u32 bw = std::numeric_limits<u32>::max();
    std::vector<u32> witness;
};

// All scalar classes whose first used generator row is j: row j gets
// coefficient 1, rows j+1..k-1 range over the field.  Digit p of the step
// counter advances on q-adic valuation p, visiting every coefficient tuple
// exactly once with a single scaled row addition per step.
void run_layer(const Field& F, const Mat& G, u32 j, u32 l, LayerBest& best) {
    const u32 k = G.rows();
    const u32 q = F.q();
    WeightTracker t(F, G.cols(), l);
    t.add_scaled(1, G.row(j));
    auto consider = [&] {
        if (t.w < best.w) {
            best.w = t.w;
            best.witness = t.cw;
        }
        if (l && t.bw < best.bw) best.bw = t.bw;
    };
    consider();
    const u32 tail = k - 1 - j;
    u64 steps = 1;
    for (u32 i = 0; i < tail; ++i) steps *= q;
    std::vector<u32> dig(tail, 0);
    std::vector<std::vector<u32>> rows(tail);
    for (u32 p = 0; p < tail; ++p) rows[p] = G.row(j + 1 + p);
    for (u64 s = 1; s < steps; ++s) {
        u64 v = s;
        u32 p = 0;
        while (v % q == 0) {
            v /= q;
            ++p;
        }
        u32 old = dig[p];
        dig[p] = (old + 1) % q;
        t.add_scaled(F.sub(dig[p], old), rows[p]);
        consider();
    }
}

DistanceReport zero_code_report(const LinearCode& C, const char* method) {
    DistanceReport rep;
    rep.lower = C.n() + 1;
    rep.upper = 0;
    rep.exact = true;
    rep.found = false;
    rep.words = 0;
    rep.method = method;
    return rep;
}

// Bounded-weight search over F_2 generators packed into 64-bit words.
struct BitSearch {
    u32 k, n, words, wcap;
    std::vector<std::vector<u64>> rows;
    std::vector<std::vector<u64>> partial;
    u32 best_w = std::numeric_limits<u32>::max();
    std::vector<u64> best;
    u64 visited = 0;

    void dfs(u32 start, u32 depth) {
        for (u32 i = start; i < k; ++i) {
            const auto& cur = partial[depth];
            auto& nxt = partial[depth + 1];
            u32 w = 0;
            for (u32 t = 0; t < words; ++t) {
                nxt[t] = cur[t] ^ rows[i][t];
                w += u32(std::popcount(nxt[t]));
            }
            ++visited;
            if (w < best_w) {
                best_w = w;
                best = nxt;
            }
            if (depth + 1 < wcap) dfs(i + 1, depth + 1);
        }
    }
};

// Bounded-weight search over any field; messages carry coefficient 1 at the
// first used row, so one message per scalar class is visited.
struct GenericSearch {
    const Field* F;
    const Mat* G;
    u32 k, n, q, wcap;
    std::vector<std::vector<u32>> partial;
    u32 best_w = std::numeric_limits<u32>::max();
    std::vector<u32> best;
    u64 visited = 0;

    void dfs(u32 start, u32 depth) {
        for (u32 i = start; i < k; ++i) {
            const std::vector<u32> row = G->row(i);
            const u32 clim = depth == 0 ? 1 : q - 1;
            for (u32 c = 1; c <= clim; ++c) {
                const auto& cur = partial[depth];
                auto& nxt = partial[depth + 1];
                u32 w = 0;
                for (u32 t = 0; t < n; ++t) {
                    u32 v = F->add(cur[t], F->mul(c, row[t]));
                    nxt[t] = v;
                    w += v != 0;
                }
                ++visited;
                if (w < best_w) {
                    best_w = w;
                    best = nxt;
                }
                if (depth + 1 < wcap) dfs(i + 1, depth + 1);
            }
        }
    }
};

bool next_combination(std::vector<u32>& c, u32 m) {
    const u32 w = u32(c.size());
    for (u32 i = w; i-- > 0;) {
        if (c[i] + (w - i) < m) {
            ++c[i];
            for (u32 j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

DistanceReport min_distance_enum(const LinearCode& C, u32 threads, u64 budget) {
    const Field& F = C.field();
    const u32 k = C.k();
    if (k == 0) return zero_code_report(C, "enum");
    const u64 words = scalar_classes(F.q(), k);
    if (words > budget) {
        throw std::invalid_argument(
            "enumeration needs " + std::to_string(words) + " words, budget is " +
            std::to_string(budget) + "; use the bounded-weight search");
    }
    const u32 l = C.block_len().value_or(0);
    const Mat& G = C.canonical();
    std::vector<LayerBest> layer(k);
    if (threads <= 1) {
        for (u32 j = 0; j < k; ++j) run_layer(F, G, j, l, layer[j]);
    } else {
        const u32 nt = std::min(threads, k);
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (u32 h = 0; h < nt; ++h) {
            pool.emplace_back([&, h] {
                for (u32 j = h; j < k; j += nt) run_layer(F, G, j, l, layer[j]);
            });
        }
        for (auto& th : pool) th.join();
    }
    DistanceReport rep;
    rep.method = "enum";
    rep.words = words;
    rep.found = true;
    rep.exact = true;
    u32 bw = std::numeric_limits<u32>::max();
    u32 w = std::numeric_limits<u32>::max();
    for (u32 j = 0; j < k; ++j) {
        if (layer[j].w < w) {
            w = layer[j].w;
            rep.witness = layer[j].witness;
        }
        bw = std::min(bw, layer[j].bw);
    }
    rep.lower = rep.upper = w;
    if (l) rep.block = bw;
    return rep;
}

DistanceReport min_distance_low_weight(const LinearCode& C, u32 w_max, u64 budget) {
    const Field& F = C.field();
    const u32 k = C.k();
    const u32 n = C.n();
    const u32 q = F.q();
    if (k == 0) return zero_code_report(C, "low-weight");
    if (w_max == 0) throw std::invalid_argument("w_max must be positive");
    const u32 wcap = std::min(w_max, k);
    u64 nodes = 0;
    u64 coeffs = 1;
    for (u32 w = 1; w <= wcap; ++w) {
        nodes = add_clamped(nodes, mul_clamped(binomial_clamped(k, w), coeffs));
        coeffs = mul_clamped(coeffs, q - 1);
    }
    if (nodes > budget) {
        throw std::invalid_argument(
            "bounded-weight search needs " + std::to_string(nodes) +
            " messages, budget is " + std::to_string(budget));
    }
    const Mat& G = C.canonical();
    DistanceReport rep;
    rep.method = "low-weight";
    u32 best_w;
    if (q == 2) {
        BitSearch s;
        s.k = k;
        s.n = n;
        s.words = (n + 63) / 64;
        s.wcap = wcap;
        s.rows.assign(k, std::vector<u64>(s.words, 0));
        for (u32 i = 0; i < k; ++i)
            for (u32 j = 0; j < n; ++j)
                if (G.at(i, j)) s.rows[i][j / 64] |= u64(1) << (j % 64);
        s.partial.assign(wcap + 1, std::vector<u64>(s.words, 0));
        s.dfs(0, 0);
        best_w = s.best_w;
        rep.words = s.visited;
        rep.witness.assign(n, 0);
        for (u32 j = 0; j < n; ++j)
            rep.witness[j] = u32((s.best[j / 64] >> (j % 64)) & 1);
    } else {
        GenericSearch s;
        s.F = &F;
        s.G = &G;
        s.k = k;
        s.n = n;
        s.q = q;
        s.wcap = wcap;
        s.partial.assign(wcap + 1, std::vector<u32>(n, 0));
        s.dfs(0, 0);
        best_w = s.best_w;
        rep.words = s.visited;
        rep.witness = s.best;
    }
    rep.found = true;
    const bool exhaustive = wcap == k;
    rep.upper = best_w;
    if (best_w <= wcap || exhaustive) {
        rep.exact = true;
        rep.lower = best_w;
    } else {
        rep.exact = false;
        rep.lower = wcap + 1;
    }
    return rep;
}

bool block_distance_at_least(const LinearCode& C, u32 l, u32 delta, u64 budget) {
    if (l == 0 || C.n() % l != 0) throw std::invalid_argument("bad block width");
    if (C.k() == 0 || delta <= 1) return true;
    const u32 m = C.n() / l;
    if (delta - 1 >= m) return false;  // any nonzero word uses at most m blocks
    const u32 w = delta - 1;
    if (binomial_clamped(m, w) > budget) {
        throw std::invalid_argument("too many block subsets for the budget");
    }
    const Mat& G = C.generator();
    std::vector<u32> sel(w);
    for (u32 i = 0; i < w; ++i) sel[i] = i;
    do {
        // Codeword supported on the selected blocks <=> generator columns
        // outside them drop rank.
        Mat sub(C.field(), C.k(), (m - w) * l);
        u32 out = 0;
        u32 si = 0;
        for (u32 b = 0; b < m; ++b) {
            if (si < w && sel[si] == b) {
                ++si;
                continue;
            }
            for (u32 j = 0; j < l; ++j, ++out)
                for (u32 i = 0; i < C.k(); ++i) sub.set(i, out, G.at(i, b * l + j));
        }
        if (sub.rank() < C.k()) return false;
    } while (next_combination(sel, m));
    return true;
}

}  // namespace qcblock
