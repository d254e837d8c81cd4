#include "mmbebhe/oracle.hpp"

#include <cassert>
#include <string>

#include "mmbebhe/smbe.hpp"

namespace mmbebhe {

std::vector<Rational> reference_segment_map(const Histogram& hist, int lo, int hi) {
    if (lo < 0 || hi > kGrayLevels - 1 || lo > hi) {
        throw InvalidBounds("reference_segment_map: bad segment [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
    std::int64_t count = 0;
    for (int g = lo; g <= hi; ++g) {
        count += hist.freq(g);
    }

    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    if (count == 0) {
        for (int k = lo; k <= hi; ++k) {
            out[static_cast<std::size_t>(k - lo)] = Rational(k);
        }
        return out;
    }

    const Rational span(hi - lo);
    std::int64_t cumulative = 0;
    for (int k = lo; k <= hi; ++k) {
        cumulative += hist.freq(k);
        const Rational c(cumulative, count);  // segment-local cumulative distribution
        out[static_cast<std::size_t>(k - lo)] = Rational(lo) + span * c;
    }
    return out;
}

namespace {

/// Midpoint approximation of the output mean after splitting at g: the lower
/// half averages (0 + g)/2, the upper (g+1 + 255)/2, weighted by mass.
/// Simplifies to ((g + L)*n - L*f_c(g)) / (2n).
Rational midpoint_output_mean(std::int64_t n, std::int64_t cumulative, int g) {
    const std::int64_t L = kGrayLevels;
    return Rational((g + L) * n - L * cumulative, 2 * n);
}

}  // namespace

RationalMap reference_mmbebhe(const GrayImage& image) {
    // Independent tally, the comparison must not lean on the integer path.
    std::array<std::int64_t, kGrayLevels> freq{};
    std::int64_t pixel_sum = 0;
    for (std::uint8_t p : image.pixels()) {
        ++freq[p];
        pixel_sum += p;
    }
    const auto n = static_cast<std::int64_t>(image.pixel_count());
    const Rational input_mean(pixel_sum, n);

    // Threshold = argmin over present gray values of the exact brightness
    // error |mean_hat(g) - mean|, ascending scan, first minimum kept. The
    // integer SMBE is 2n times this error, so the argmin and ties agree.
    int threshold = -1;
    Rational best_error;
    std::int64_t cumulative = 0;
    for (int g = 0; g < kGrayLevels; ++g) {
        cumulative += freq[static_cast<std::size_t>(g)];
        if (freq[static_cast<std::size_t>(g)] == 0) {
            continue;
        }
        const Rational error = (midpoint_output_mean(n, cumulative, g) - input_mean).abs();
        if (threshold < 0 || error < best_error) {
            best_error = error;
            threshold = g;
        }
    }
    assert(threshold >= 0);

    std::array<std::uint32_t, kGrayLevels> ufreq{};
    for (int g = 0; g < kGrayLevels; ++g) {
        ufreq[static_cast<std::size_t>(g)] = static_cast<std::uint32_t>(freq[static_cast<std::size_t>(g)]);
    }
    const Histogram hist(ufreq);

    RationalMap rm;
    rm.threshold = static_cast<std::uint8_t>(threshold);
    const std::vector<Rational> lower = reference_segment_map(hist, 0, threshold);
    for (int k = 0; k <= threshold; ++k) {
        rm.entries[static_cast<std::size_t>(k)] = lower[static_cast<std::size_t>(k)];
    }
    if (threshold < kGrayLevels - 1) {
        const std::vector<Rational> upper =
            reference_segment_map(hist, threshold + 1, kGrayLevels - 1);
        for (int k = threshold + 1; k < kGrayLevels; ++k) {
            rm.entries[static_cast<std::size_t>(k)] = upper[static_cast<std::size_t>(k - threshold - 1)];
        }
    }
    return rm;
}

std::uint8_t brute_force_threshold(const Histogram& hist) {
    int best_gray = -1;
    std::int64_t best_abs = 0;
    for (int g = 0; g < kGrayLevels; ++g) {
        if (hist.freq(g) == 0) {
            continue;
        }
        std::int64_t v = smbe_closed_form(hist, g);
        if (v < 0) {
            v = -v;
        }
        if (best_gray < 0 || v < best_abs) {
            best_abs = v;
            best_gray = g;
        }
    }
    assert(best_gray >= 0);  // Histogram guarantees total >= 1
    return static_cast<std::uint8_t>(best_gray);
}

Rational ambe(const GrayImage& a, const GrayImage& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw DimensionMismatch("ambe: " + std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                                "x" + std::to_string(b.height()));
    }
    std::int64_t sum_a = 0;
    std::int64_t sum_b = 0;
    for (std::uint8_t p : a.pixels()) {
        sum_a += p;
    }
    for (std::uint8_t p : b.pixels()) {
        sum_b += p;
    }
    const auto n = static_cast<std::int64_t>(a.pixel_count());
    return (Rational(sum_a, n) - Rational(sum_b, n)).abs();
}

std::int64_t remainder_rule_round(const Rational& value) {
    assert(value.num() >= 0);
    const std::int64_t q = value.num() / value.den();
    const std::int64_t r = value.num() % value.den();
    return r > (value.den() >> 1) ? q + 1 : q;
}

VerifyResult verify_integer_vs_reference(const GrayImage& image) {
    const Histogram hist = generate_hist(image);
    const PixelMap integer_map = mmbebhe(image);
    const RationalMap exact_map = reference_mmbebhe(image);
    const std::uint8_t brute = brute_force_threshold(hist);

    if (integer_map.threshold != exact_map.threshold || integer_map.threshold != brute) {
        return VerifyResult{false, integer_map.threshold,
                            "threshold disagreement: integer=" +
                                std::to_string(integer_map.threshold) +
                                " exact=" + std::to_string(exact_map.threshold) +
                                " brute=" + std::to_string(brute)};
    }
    for (int k = 0; k < kGrayLevels; ++k) {
        const Rational& exact = exact_map.entries[static_cast<std::size_t>(k)];
        const std::int64_t rounded = remainder_rule_round(exact);
        const std::int64_t integer = integer_map.map[static_cast<std::size_t>(k)];
        if (integer != rounded) {
            return VerifyResult{false, k,
                                "map[" + std::to_string(k) + "] = " + std::to_string(integer) +
                                    " but remainder rule on exact value gives " +
                                    std::to_string(rounded)};
        }
        const std::int64_t nearest = exact.round_nearest();
        const std::int64_t diff = integer > nearest ? integer - nearest : nearest - integer;
        if (diff > 1) {
            return VerifyResult{false, k,
                                "map[" + std::to_string(k) + "] = " + std::to_string(integer) +
                                    " is more than one level from round-to-nearest " +
                                    std::to_string(nearest)};
        }
    }
    return VerifyResult{true, -1, ""};
}

}  // namespace mmbebhe
