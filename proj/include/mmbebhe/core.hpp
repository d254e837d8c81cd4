#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mmbebhe/errors.hpp"

namespace mmbebhe {

/// Number of representable gray levels (8-bit domain).
inline constexpr int kGrayLevels = 256;

/// Largest admissible pixel count. |SMBE| <= 255*n, so n <= 2.5e6 keeps
/// every SMBE strictly inside int32 and distinct from the sentinel.
inline constexpr std::uint32_t kMaxPixels = 2'500'000;

/// An 8-bit grayscale raster. Immutable after construction.
class GrayImage {
public:
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }
    std::span<const std::uint8_t> pixels() const { return pixels_; }

    bool operator==(const GrayImage& other) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/// 256-bin frequency table plus the derived totals the rest of the
/// pipeline consumes. Immutable after construction; total and pixel_sum
/// are computed from the bins so the histogram invariants hold by
/// construction.
class Histogram {
public:
    explicit Histogram(const std::array<std::uint32_t, kGrayLevels>& freq);

    std::uint32_t freq(int gray) const { return freq_[static_cast<std::size_t>(gray)]; }
    const std::array<std::uint32_t, kGrayLevels>& frequencies() const { return freq_; }

    /// Total pixel count n.
    std::uint32_t total() const { return total_; }
    /// Sum of all pixel values, 64-bit (255 * kMaxPixels overflows 32 bits).
    std::uint64_t pixel_sum() const { return pixel_sum_; }

    bool operator==(const Histogram& other) const = default;

private:
    std::array<std::uint32_t, kGrayLevels> freq_;
    std::uint32_t total_;
    std::uint64_t pixel_sum_;
};

/// Tallies the frequency of each gray value in one pass.
/// Throws ImageTooLarge when the pixel count exceeds kMaxPixels.
Histogram generate_hist(const GrayImage& image);

}  // namespace mmbebhe
