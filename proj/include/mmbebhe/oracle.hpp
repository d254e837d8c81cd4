#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mmbebhe/core.hpp"
#include "mmbebhe/equalize.hpp"
#include "mmbebhe/rational.hpp"

namespace mmbebhe {

/// Unrounded per-segment map values, exact. entries[k] lies inside its
/// segment's bounds; identity on an empty segment.
struct RationalMap {
    std::array<Rational, kGrayLevels> entries;
    std::uint8_t threshold;
};

/// Reference pipeline in exact rational arithmetic, independent of the
/// integer implementation: its own tally, threshold by minimizing the exact
/// midpoint-approximation brightness error |mean_hat(g) - mean|, and
/// unrounded map values lo + (hi-lo) * c(k) with c(k) the segment-local
/// cumulative distribution.
RationalMap reference_mmbebhe(const GrayImage& image);

/// Exact segment map used by the reference: hi-lo+1 entries for [lo, hi]
/// given the source histogram; identity when the segment holds no pixels.
std::vector<Rational> reference_segment_map(const Histogram& hist, int lo, int hi);

/// Evaluates the closed-form SMBE at every present gray value and returns
/// the smallest gray value minimizing the absolute value.
std::uint8_t brute_force_threshold(const Histogram& hist);

/// Absolute mean brightness error |mean(a) - mean(b)|, exact.
/// Throws DimensionMismatch unless a and b share dimensions.
Rational ambe(const GrayImage& a, const GrayImage& b);

/// The integer rounding rule applied to an exact map value: floor, plus one
/// when the remainder exceeds half the denominator (halves round down).
/// Reducing numerator/count to lowest terms does not change the outcome,
/// so this is well defined on a reduced Rational.
std::int64_t remainder_rule_round(const Rational& value);

/// Outcome of diffing the integer pipeline against the exact reference.
struct VerifyResult {
    bool ok;
    int first_bad_gray;  // -1 when ok
    std::string detail;  // empty when ok
};

/// Checks, for one image: threshold agreement across all three routes
/// (scan, brute force, exact reference), bit-exact equality of the integer
/// map with the remainder rule applied to the exact map, and the <= 1 gray
/// level bound against round-to-nearest.
VerifyResult verify_integer_vs_reference(const GrayImage& image);

}  // namespace mmbebhe
