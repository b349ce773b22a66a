#pragma once
// Block error channel: corrupts exactly w distinct l-blocks of a word, each
// replaced error block drawn uniformly from the nonzero vectors of F_q^l.

#include <random>
#include <vector>

#include "qcblock/field.hpp"

namespace qcblock {

struct ChannelModel {
    u32 w = 0;     // corrupted blocks per trial
    u64 seed = 0;  // std::mt19937_64 sequence
};

// word + e where e has exactly w nonzero blocks; throws when w exceeds the
// block count.
std::vector<u32> add_block_errors(const Field& F, const std::vector<u32>& word, u32 l,
                                  u32 w, std::mt19937_64& rng);

}  // namespace qcblock
