#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mmbebhe/core.hpp"
#include "mmbebhe/equalize.hpp"

namespace mmbebhe {

/// Pipeline stages, in the order the done-flag handoff starts them.
enum class Stage : int {
    GenerateHist = 0,
    CalculateSmbe = 1,
    FindThreshold = 2,
    GenCumuHist = 3,
    CreateMap = 4,
};

inline constexpr int kStageCount = 5;

std::string_view stage_name(Stage stage);

/// One stage execution: element count processed, simulated cycles, and the
/// derived wall time at the model's clock.
struct StageReport {
    Stage stage;
    std::uint64_t iterations;
    std::uint64_t cycles;  // overhead(stage) + iterations * cpi(stage)
    double micros;         // cycles / clock_mhz

    bool operator==(const StageReport& other) const = default;
};

/// Affine per-stage cycle model. The defaults are calibration constants:
/// one pixel per clock for the histogram stage, and 3 cycles per element
/// plus small fixed overheads chosen so the two 256-iteration stages land
/// on 2.57 us and each two-call segment pair totals 2.60 us at 300 MHz.
struct CycleModel {
    double clock_mhz = 300.0;
    std::array<std::uint64_t, kStageCount> cpi{1, 3, 3, 3, 3};
    std::array<std::uint64_t, kStageCount> overhead{0, 3, 3, 6, 6};

    std::uint64_t cycles_for(Stage stage, std::uint64_t iterations) const;
};

struct SimulationResult {
    std::vector<StageReport> stages;
    PixelMap map;
};

/// Runs the staged pipeline strictly in sequence, one report per stage
/// execution. GenCumuHist and CreateMap each appear twice unless the
/// threshold is 255, in which case the upper segment never runs. The cycle
/// model never alters results: the returned map is the mmbebhe map.
SimulationResult simulate(const GrayImage& image, const CycleModel& model = CycleModel{});

}  // namespace mmbebhe
