#include "mmbebhe/equalize.hpp"

#include <cassert>
#include <string>

namespace mmbebhe {

CumulativeSegment gen_cumu_hist(const Histogram& hist, int lo, int hi) {
    if (lo < 0 || hi > kGrayLevels - 1 || lo > hi) {
        throw InvalidBounds("gen_cumu_hist: bad segment [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
    CumulativeSegment seg;
    seg.lo = static_cast<std::uint8_t>(lo);
    seg.hi = static_cast<std::uint8_t>(hi);
    seg.cumu.resize(static_cast<std::size_t>(hi - lo + 1));
    // The running sum restarts at segment entry: cumulative frequency is
    // local to [lo, hi].
    std::uint32_t prev = 0;
    for (int g = lo; g <= hi; ++g) {
        prev += hist.freq(g);
        seg.cumu[static_cast<std::size_t>(g - lo)] = prev;
    }
    seg.count = prev;
    return seg;
}

std::vector<std::uint8_t> create_map(const CumulativeSegment& seg) {
    const int lo = seg.lo;
    const int hi = seg.hi;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(hi - lo + 1));

    if (seg.count == 0) {
        // No pixel consults these entries; identity is the total extension.
        for (int k = lo; k <= hi; ++k) {
            out[static_cast<std::size_t>(k - lo)] = static_cast<std::uint8_t>(k);
        }
        return out;
    }

    const std::uint64_t count = seg.count;
    const std::uint64_t half = count >> 1;
    for (int k = lo; k <= hi; ++k) {
        const std::uint64_t numerator =
            count * static_cast<std::uint64_t>(lo) +
            static_cast<std::uint64_t>(hi - lo) * seg.cumu[static_cast<std::size_t>(k - lo)];
        std::uint64_t value = numerator / count;
        if (numerator % count > half) {
            ++value;
        }
        assert(value >= static_cast<std::uint64_t>(lo) && value <= static_cast<std::uint64_t>(hi));
        out[static_cast<std::size_t>(k - lo)] = static_cast<std::uint8_t>(value);
    }
    return out;
}

namespace {

void merge_segment(PixelMap& pm, const CumulativeSegment& seg,
                   const std::vector<std::uint8_t>& partial) {
    for (int k = seg.lo; k <= seg.hi; ++k) {
        pm.map[static_cast<std::size_t>(k)] = partial[static_cast<std::size_t>(k - seg.lo)];
    }
}

}  // namespace

PixelMap mmbebhe(const GrayImage& image) {
    const Histogram hist = generate_hist(image);
    const Threshold threshold = find_threshold(calculate_smbe(hist));

    PixelMap pm{};
    pm.threshold = threshold.value;

    const CumulativeSegment lower = gen_cumu_hist(hist, 0, threshold.value);
    merge_segment(pm, lower, create_map(lower));

    if (threshold.value < kGrayLevels - 1) {
        const CumulativeSegment upper = gen_cumu_hist(hist, threshold.value + 1, kGrayLevels - 1);
        merge_segment(pm, upper, create_map(upper));
    }
    return pm;
}

PixelMap he_map(const GrayImage& image) {
    const Histogram hist = generate_hist(image);

    PixelMap pm{};
    pm.threshold = kGrayLevels - 1;
    const CumulativeSegment full = gen_cumu_hist(hist, 0, kGrayLevels - 1);
    merge_segment(pm, full, create_map(full));
    return pm;
}

GrayImage apply_map(const GrayImage& image, const PixelMap& map) {
    std::vector<std::uint8_t> out;
    out.reserve(image.pixel_count());
    for (std::uint8_t p : image.pixels()) {
        out.push_back(map.map[p]);
    }
    return GrayImage(image.width(), image.height(), std::move(out));
}

}  // namespace mmbebhe
