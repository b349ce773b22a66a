#include "qcblock/channel.hpp"

#include <stdexcept>

namespace qcblock {

std::vector<u32> add_block_errors(const Field& F, const std::vector<u32>& word, u32 l,
                                  u32 w, std::mt19937_64& rng) {
    if (l == 0 || word.size() % l != 0) throw std::invalid_argument("bad block width");
    const u32 m = u32(word.size() / l);
    if (w > m) throw std::invalid_argument("more corrupted blocks than blocks");
    std::vector<u32> out = word;
    std::vector<bool> used(m, false);
    for (u32 t = 0; t < w; ++t) {
        u32 b;
        do {
            b = u32(rng() % m);
        } while (used[b]);
        used[b] = true;
        // Uniform nonzero block by rejection.
        std::vector<u32> e(l);
        bool zero = true;
        do {
            zero = true;
            for (u32 j = 0; j < l; ++j) {
                e[j] = u32(rng() % F.q());
                if (e[j]) zero = false;
            }
        } while (zero);
        for (u32 j = 0; j < l; ++j) out[b * l + j] = F.add(out[b * l + j], e[j]);
    }
    return out;
}

}  // namespace qcblock
