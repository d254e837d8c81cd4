#pragma once

#include <array>
#include <cstdint>

#include "mmbebhe/core.hpp"

namespace mmbebhe {

/// Marks SMBE entries of absent gray values so they can never win the
/// threshold scan.
inline constexpr std::int32_t kSmbeSentinel = 0x7fffffff;

/// Scaled mean brightness error per candidate threshold. entries[g] is the
/// sentinel exactly when freq[g] == 0 in the source histogram.
struct SmbeTable {
    std::array<std::int32_t, kGrayLevels> entries;

    bool operator==(const SmbeTable& other) const = default;
};

/// Split point with the signed SMBE it attains.
struct Threshold {
    std::uint8_t value;
    std::int32_t smbe;

    bool operator==(const Threshold& other) const = default;
};

/// Computes the SMBE recursion over all 256 gray values in ascending order.
///
/// The accumulator starts at L*(n - freq[0]) - 2*pixel_sum and advances by
/// n - L*freq[g] at every g, including absent values (skipping them would
/// drop the +n contribution of each gap and diverge from the closed form).
/// Only present gray values get their accumulator value stored; absent ones
/// get the sentinel.
SmbeTable calculate_smbe(const Histogram& hist);

/// Closed form n*(L + gamma) - L*f_c(gamma) - 2*pixel_sum, evaluated in
/// 64-bit arithmetic. Defined for every gamma, present or absent; equals the
/// recursion's accumulator at gamma.
std::int64_t smbe_closed_form(const Histogram& hist, int gamma);

/// Scans ascending for the entry with minimum |SMBE|, strict comparison, so
/// the first gray value attaining the minimum wins ties. The running best
/// starts at the sentinel, which any candidate displaces.
Threshold find_threshold(const SmbeTable& table);

}  // namespace mmbebhe
