#include "mmbebhe/core.hpp"

#include <stdexcept>
#include <string>

namespace mmbebhe {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ < 1 || height_ < 1) {
        throw std::invalid_argument("GrayImage: dimensions must be positive, got " +
                                    std::to_string(width_) + "x" + std::to_string(height_));
    }
    const auto expected =
        static_cast<std::uint64_t>(width_) * static_cast<std::uint64_t>(height_);
    if (pixels_.size() != expected) {
        throw std::invalid_argument("GrayImage: pixel count " + std::to_string(pixels_.size()) +
                                    " does not match " + std::to_string(width_) + "x" +
                                    std::to_string(height_));
    }
}

Histogram::Histogram(const std::array<std::uint32_t, kGrayLevels>& freq) : freq_(freq) {
    std::uint64_t total = 0;
    std::uint64_t sum = 0;
    for (int g = 0; g < kGrayLevels; ++g) {
        total += freq_[static_cast<std::size_t>(g)];
        sum += static_cast<std::uint64_t>(g) * freq_[static_cast<std::size_t>(g)];
    }
    if (total == 0) {
        throw std::invalid_argument("Histogram: at least one pixel required");
    }
    if (total > kMaxPixels) {
        throw ImageTooLarge("Histogram: " + std::to_string(total) + " pixels exceed the " +
                            std::to_string(kMaxPixels) + " bound that keeps SMBE in 32 bits");
    }
    total_ = static_cast<std::uint32_t>(total);
    pixel_sum_ = sum;
}

Histogram generate_hist(const GrayImage& image) {
    if (image.pixel_count() > kMaxPixels) {
        throw ImageTooLarge("generate_hist: image has " + std::to_string(image.pixel_count()) +
                            " pixels, limit is " + std::to_string(kMaxPixels));
    }
    std::array<std::uint32_t, kGrayLevels> freq{};
    for (std::uint8_t p : image.pixels()) {
        ++freq[p];
    }
    return Histogram(freq);
}

}  // namespace mmbebhe
