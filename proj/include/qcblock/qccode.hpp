#pragma once
// Quasi-cyclic code structure.
//
// Codewords of length n = m*l are read as m blocks of l symbols; block i,
// position j sits at coordinate i*l + j.  A code is l-quasi-cyclic when its
// row space is stable under the left cyclic shift by l.  Such codes are
// in bijection with left ideals of the ring of l x l matrix polynomials
// modulo X^m - 1: block i carries the coefficient of X^i, so the left shift
// by l acts as division by X.

#include <optional>
#include <utility>
#include <vector>

#include "qcblock/matpoly.hpp"

namespace qcblock {

// Left cyclic shift applied `steps` times; steps may exceed the length.
std::vector<u32> cyclic_shift(const std::vector<u32>& x, u64 steps);

// Number of nonzero l-blocks.
u32 block_weight(const std::vector<u32>& x, u32 l);

class LinearCode {
public:
    // Keeps the earliest maximal independent subset of the given rows as the
    // generator matrix; accepts rank 0.
    static LinearCode from_rows(const Field& F, const Mat& rows);
    static LinearCode zero_code(const Field& F, u32 n);
    static LinearCode full_code(const Field& F, u32 n);

    const Field& field() const { return *F_; }
    u32 n() const { return n_; }
    u32 k() const { return k_; }
    const Mat& generator() const { return gen_; }
    const Mat& canonical() const { return canon_; }  // RREF basis, k rows

    // Block width metadata (l); unset when the code has no declared block
    // structure.
    std::optional<u32> block_len() const { return block_l_; }
    u32 blocks() const;  // m = n / l; requires block_len set
    void set_block_len(u32 l);

    std::vector<u32> encode(const std::vector<u32>& message) const;
    bool contains(const std::vector<u32>& word) const;
    bool operator==(const LinearCode& o) const;
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

    LinearCode dual() const;

    // Row space stable under the left shift by `steps`.
    bool stable_under_shift(u32 steps) const;
    bool is_quasi_cyclic(u32 l) const { return n_ % l == 0 && stable_under_shift(l); }

private:
    LinearCode(const Field& F, u32 n, Mat gen, Mat canon, std::vector<u32> pivots);

    const Field* F_;
    u32 n_, k_;
    Mat gen_;
    Mat canon_;
    std::vector<u32> canon_pivots_;
    std::optional<u32> block_l_;
};

// Common rank of every l-column block of a generator matrix; throws
// std::invalid_argument when the blocks disagree (the code is not
// l-quasi-cyclic).  Zero code has block rank 0.
u32 block_rank(const LinearCode& C, u32 l);

// Basis of an l-quasi-cyclic code assembled from r = block_rank generators
// and their left shifts by multiples of l.
struct QcGenerators {
    std::vector<std::vector<u32>> gens;  // r rows, sorted by (first block, pivot)
    std::vector<u32> firsts;             // first nonzero block index per generator
    // Shift-major basis: all generators with first >= j shifted j blocks, for
    // j = 0, 1, ...; exactly k rows.
    Mat basis;
    std::vector<std::pair<u32, u32>> schedule;  // (generator index, j) per basis row
};
QcGenerators qc_generator_basis(const LinearCode& C, u32 l);

// g(X) = X^{-nu} * sum_i G_i X^i where row t of G_i is block i of the t-th
// generator (rows past r are zero) and nu is the least i with G_i nonzero.
// The code is recovered as the row space of g, Xg, ..., X^{m-1}g.
struct QcGeneratorPoly {
    MatPoly g;   // l x l coefficients, degree <= m - 1
    u32 nu;
    QcGenerators gens;
};
QcGeneratorPoly generator_polynomial(const LinearCode& C, u32 l);

// Code spanned by the rows of X^j g(X) mod X^m - 1 for j = 0..m-1 under the
// block correspondence.
LinearCode code_from_generator(const MatPoly& g, u32 m);

// Whether P * (transpose-coefficients of the degree-window reciprocal of Q)
// vanishes modulo X^m - 1; holds when P generates a code and Q its dual.
bool check_dual_identity(const MatPoly& P, const MatPoly& Q, u32 m);

// Blockwise identification of F_q^l with the extension of degree l over F_q
// through the basis (1, alpha, ..., alpha^{l-1}).
class FoldingSpec {
public:
    // alpha defaults to the residue class of X in the extension field;
    // any alpha whose powers form a basis is accepted.
    FoldingSpec(const Field& Fq, u32 l, std::optional<u32> alpha = std::nullopt);

    const Field& base() const { return *Fq_; }
    const Field& extension() const { return *Fql_; }
    u32 l() const { return l_; }
    u32 alpha() const { return alpha_; }

    u32 fold_block(const std::vector<u32>& block) const;    // length l
    std::vector<u32> unfold_element(u32 y) const;
    std::vector<u32> fold(const std::vector<u32>& x) const;  // length m*l -> m
    std::vector<u32> unfold(const std::vector<u32>& y) const;

private:
    const Field* Fq_;
    const Field* Fql_;
    const Embedding* emb_;
    u32 l_;
    u32 alpha_;
    Mat fwd_;  // prime-field digit matrix of the folding map
    Mat inv_;
};

}  // namespace qcblock
