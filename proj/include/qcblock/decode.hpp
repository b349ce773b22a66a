#pragma once
// Bounded-distance decoding for quasi-BCH codes through the matrix key
// equation: with error blocks e_i supported on W, the locator
// Lambda = prod_{i in W}(I - A^i X) and the evaluator L satisfy
// Lambda * S = L mod X^delta, where S is the syndrome series and
// deg L < |W|.  All coefficient matrices here are polynomials in A, so
// factors commute and matrix evaluation at powers of A is unambiguous.

#include <string>
#include <vector>

#include "qcblock/qbch.hpp"

namespace qcblock {

// prod_{i in W} (I - A^i X); pows = root_powers(A, m).
MatPoly error_locator(const std::vector<Mat>& pows, const std::vector<u32>& W);

// sum_{i in W} A^i prod_{j in W, j != i} (I - A^j X) * e_i with e_i the l x 1
// error columns over the root field.
MatPoly error_evaluator(const std::vector<Mat>& pows, const std::vector<u32>& W,
                        const std::vector<Mat>& blocks);

// (locator * syndrome - evaluator) vanishes through coefficient order-1.
bool key_equation_holds(const MatPoly& locator, const MatPoly& syndrome,
                        const MatPoly& evaluator, u32 order);

// Positions i in [0, m) where locator(A^{-i}) is singular.
std::vector<u32> chien_search(const MatPoly& locator, const std::vector<Mat>& pows);

// Error columns over the root field from the evaluator:
// e_i = prod_{j != i}(A^i - A^j)^{-1} * A^{i(w-2)} * L(A^{-i}), w = |W|.
std::vector<Mat> error_values(const std::vector<Mat>& pows, const std::vector<u32>& W,
                              const MatPoly& evaluator);

enum class DecodeStrategy {
    Support,      // enumerate supports, solve the syndrome system over Fq
    KeyEquation,  // enumerate locators, accept via the key equation, then
                  // recover values from the evaluator
};

struct DecodeResult {
    bool ok;
    std::vector<u32> error;      // over Fq, length m*l; empty when !ok
    std::vector<u32> corrected;  // y - error; empty when !ok
    u32 weight;                  // block weight of the error
    std::string note;            // failure reason when !ok
};

// Corrects up to max_weight error blocks (default floor((delta-1)/2)).
// Fails with a note when no candidate fits or several distinct ones do.
DecodeResult qbch_decode(const QbchCode& Q, const std::vector<u32>& y,
                         DecodeStrategy strategy, u32 max_weight = 0);

}  // namespace qcblock
