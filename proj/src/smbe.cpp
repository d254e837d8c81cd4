#include "mmbebhe/smbe.hpp"

#include <cassert>
#include <cstdlib>

namespace mmbebhe {

SmbeTable calculate_smbe(const Histogram& hist) {
    const std::int64_t n = hist.total();
    const std::int64_t L = kGrayLevels;

    SmbeTable table{};
    // Base case, then one serial step per gray value; each entry depends on
    // the previous accumulator value, so the order is part of the contract.
    std::int64_t acc = L * (n - hist.freq(0)) - 2 * static_cast<std::int64_t>(hist.pixel_sum());
    for (int g = 0; g < kGrayLevels; ++g) {
        if (g > 0) {
            acc += n - L * hist.freq(g);
        }
        if (hist.freq(g) > 0) {
            // kMaxPixels keeps |acc| < sentinel; the assert documents it.
            assert(acc > -kSmbeSentinel && acc < kSmbeSentinel);
            table.entries[static_cast<std::size_t>(g)] = static_cast<std::int32_t>(acc);
        } else {
            table.entries[static_cast<std::size_t>(g)] = kSmbeSentinel;
        }
    }
    return table;
}

std::int64_t smbe_closed_form(const Histogram& hist, int gamma) {
    assert(gamma >= 0 && gamma < kGrayLevels);
    const std::int64_t n = hist.total();
    const std::int64_t L = kGrayLevels;
    std::int64_t cumulative = 0;
    for (int j = 0; j <= gamma; ++j) {
        cumulative += hist.freq(j);
    }
    return n * (L + gamma) - L * cumulative - 2 * static_cast<std::int64_t>(hist.pixel_sum());
}

Threshold find_threshold(const SmbeTable& table) {
    // Running best starts at the sentinel; any candidate displaces it
    // because kMaxPixels bounds |SMBE| strictly below the sentinel.
    std::int64_t best_abs = kSmbeSentinel;
    int best_gray = -1;
    for (int g = 0; g < kGrayLevels; ++g) {
        const std::int64_t value = table.entries[static_cast<std::size_t>(g)];
        if (value == kSmbeSentinel) {
            continue;
        }
        const std::int64_t magnitude = value < 0 ? -value : value;
        if (magnitude < best_abs) {  // strict: first gray value wins ties
            best_abs = magnitude;
            best_gray = g;
        }
    }
    if (best_gray < 0) {
        throw Error("find_threshold: table has no candidate entries");
    }
    return Threshold{static_cast<std::uint8_t>(best_gray),
                     table.entries[static_cast<std::size_t>(best_gray)]};
}

}  // namespace mmbebhe
