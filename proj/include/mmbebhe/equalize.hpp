#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mmbebhe/core.hpp"
#include "mmbebhe/smbe.hpp"

namespace mmbebhe {

/// Cumulative frequencies local to a gray-level segment [lo, hi]: the
/// running sum restarts at zero on segment entry.
struct CumulativeSegment {
    std::uint8_t lo;
    std::uint8_t hi;
    std::vector<std::uint32_t> cumu;  // size hi - lo + 1, non-decreasing
    std::uint32_t count;              // pixels in segment = cumu.back()

    bool operator==(const CumulativeSegment& other) const = default;
};

/// Total gray-level lookup table plus the split point it was built from.
struct PixelMap {
    std::array<std::uint8_t, kGrayLevels> map;
    std::uint8_t threshold;

    bool operator==(const PixelMap& other) const = default;
};

/// Accumulates freq[lo..hi] into segment-local cumulative frequencies.
/// Throws InvalidBounds unless 0 <= lo <= hi <= 255.
CumulativeSegment gen_cumu_hist(const Histogram& hist, int lo, int hi);

/// Builds the partial map over [seg.lo, seg.hi].
///
/// For a non-empty segment, map[k] = numerator div count with
/// numerator = count*lo + (hi-lo)*cumu[k-lo], incremented by one when
/// numerator mod count exceeds count >> 1 (round-half-down for even counts).
/// A zero-count segment maps identically: no pixel consults those entries
/// and the division is undefined there.
std::vector<std::uint8_t> create_map(const CumulativeSegment& seg);

/// Full pipeline: histogram, SMBE, threshold, then segment-wise
/// equalization of [0, T] and [T+1, 255] merged into one total map.
/// The upper segment is skipped entirely when T = 255.
PixelMap mmbebhe(const GrayImage& image);

/// Unsplit baseline: one full-range segment, threshold recorded as 255.
PixelMap he_map(const GrayImage& image);

/// Elementwise lookup, Y(i,j) = map[X(i,j)]. Dimensions are preserved.
GrayImage apply_map(const GrayImage& image, const PixelMap& map);

}  // namespace mmbebhe
