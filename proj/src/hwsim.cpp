#include "mmbebhe/hwsim.hpp"

#include <cassert>

#include "mmbebhe/smbe.hpp"

namespace mmbebhe {

std::string_view stage_name(Stage stage) {
    switch (stage) {
        case Stage::GenerateHist: return "generate_hist";
        case Stage::CalculateSmbe: return "calculate_smbe";
        case Stage::FindThreshold: return "find_threshold";
        case Stage::GenCumuHist: return "gen_cumu_hist";
        case Stage::CreateMap: return "create_map";
    }
    assert(false);
    return "?";
}

std::uint64_t CycleModel::cycles_for(Stage stage, std::uint64_t iterations) const {
    const auto i = static_cast<std::size_t>(stage);
    return overhead[i] + iterations * cpi[i];
}

SimulationResult simulate(const GrayImage& image, const CycleModel& model) {
    SimulationResult result{};

    const auto record = [&](Stage stage, std::uint64_t iterations) {
        const std::uint64_t cycles = model.cycles_for(stage, iterations);
        result.stages.push_back(StageReport{stage, iterations, cycles,
                                            static_cast<double>(cycles) / model.clock_mhz});
    };

    // Strictly serial: each stage starts only after its predecessor's done
    // flag, so the report order encodes the handoff.
    const Histogram hist = generate_hist(image);
    record(Stage::GenerateHist, image.pixel_count());

    const SmbeTable table = calculate_smbe(hist);
    record(Stage::CalculateSmbe, kGrayLevels);

    const Threshold threshold = find_threshold(table);
    record(Stage::FindThreshold, kGrayLevels);

    result.map.threshold = threshold.value;

    const CumulativeSegment lower = gen_cumu_hist(hist, 0, threshold.value);
    record(Stage::GenCumuHist, lower.cumu.size());
    const std::vector<std::uint8_t> lower_map = create_map(lower);
    record(Stage::CreateMap, lower_map.size());
    for (int k = lower.lo; k <= lower.hi; ++k) {
        result.map.map[static_cast<std::size_t>(k)] =
            lower_map[static_cast<std::size_t>(k - lower.lo)];
    }

    if (threshold.value < kGrayLevels - 1) {
        const CumulativeSegment upper = gen_cumu_hist(hist, threshold.value + 1, kGrayLevels - 1);
        record(Stage::GenCumuHist, upper.cumu.size());
        const std::vector<std::uint8_t> upper_map = create_map(upper);
        record(Stage::CreateMap, upper_map.size());
        for (int k = upper.lo; k <= upper.hi; ++k) {
            result.map.map[static_cast<std::size_t>(k)] =
                upper_map[static_cast<std::size_t>(k - upper.lo)];
        }
    }
    return result;
}

}  // namespace mmbebhe
