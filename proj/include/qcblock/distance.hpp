#pragma once
// Minimum-distance computation at desk scale.
//
// Exhaustive enumeration walks one codeword per scalar class, (q^k-1)/(q-1)
// words, stepping through base-q Gray increments so each word differs from
// the previous by one row addition; Hamming and block weights are maintained
// in the same pass.  The bounded-weight search enumerates messages of weight
// at most w_max over the reduced generator: a codeword's restriction to the
// pivot columns is its message, so every codeword of weight <= w_max is
// covered and a hit of weight w <= w_max is the exact distance.

#include <optional>
#include <string>
#include <vector>

#include "qcblock/qccode.hpp"

namespace qcblock {

struct DistanceReport {
    u32 lower = 0;             // proven lower bound on the Hamming distance
    u32 upper = 0;             // witness weight when found
    bool exact = false;
    bool found = false;        // a nonzero codeword was located
    std::optional<u32> block;  // exact block distance when computed
    std::vector<u32> witness;  // nonzero codeword of weight `upper`
    u64 words = 0;             // codewords visited
    std::string method;
};

// Exact distance; block distance included when the code carries a block
// width.  The zero code reports found = false, lower = n + 1.  Throws
// std::invalid_argument when (q^k-1)/(q-1) exceeds the budget; use
// min_distance_low_weight then.
DistanceReport min_distance_enum(const LinearCode& C, u32 threads = 1,
                                 u64 budget = u64(1) << 26);

// Exact distance if it is <= w_max (exact = found = true), otherwise the
// lower bound w_max + 1.  Throws when the message count exceeds the budget.
DistanceReport min_distance_low_weight(const LinearCode& C, u32 w_max,
                                       u64 budget = 1000000000ull);

// No nonzero codeword is supported on fewer than delta blocks: rank test on
// the generator columns outside each (delta-1)-subset of blocks.
bool block_distance_at_least(const LinearCode& C, u32 l, u32 delta,
                             u64 budget = 100000000ull);

}  // namespace qcblock
