#include <doctest.h>

#include "mmbebhe/equalize.hpp"
#include "mmbebhe/hwsim.hpp"
#include "support/corpus.hpp"

using mmbebhe::CycleModel;
using mmbebhe::GrayImage;
using mmbebhe::simulate;
using mmbebhe::SimulationResult;
using mmbebhe::Stage;
using mmbebhe::stage_name;
using mmbebhe::StageReport;

TEST_CASE("stage names") {
    CHECK(stage_name(Stage::GenerateHist) == "generate_hist");
    CHECK(stage_name(Stage::CalculateSmbe) == "calculate_smbe");
    CHECK(stage_name(Stage::FindThreshold) == "find_threshold");
    CHECK(stage_name(Stage::GenCumuHist) == "gen_cumu_hist");
    CHECK(stage_name(Stage::CreateMap) == "create_map");
}

TEST_CASE("default cycle model calibration") {
    const CycleModel m;
    CHECK(m.clock_mhz == 300.0);
    CHECK(m.cycles_for(Stage::GenerateHist, 4096) == 4096);
    CHECK(m.cycles_for(Stage::CalculateSmbe, 256) == 771);
    CHECK(m.cycles_for(Stage::FindThreshold, 256) == 771);
    // the two segment calls always sum to 780 cycles, whatever the split
    for (int width = 1; width < 256; ++width) {
        const auto pair = m.cycles_for(Stage::GenCumuHist, width) +
                          m.cycles_for(Stage::GenCumuHist, 256 - width);
        CHECK(pair == 780);
        const auto maps = m.cycles_for(Stage::CreateMap, width) +
                          m.cycles_for(Stage::CreateMap, 256 - width);
        CHECK(maps == 780);
    }
}

TEST_CASE("simulated stage sequence for the worked image") {
    const SimulationResult r = simulate(corpus::e1());
    REQUIRE(r.stages.size() == 7);

    CHECK(r.stages[0] == StageReport{Stage::GenerateHist, 8, 8, 8 / 300.0});
    CHECK(r.stages[1] == StageReport{Stage::CalculateSmbe, 256, 771, 2.57});
    CHECK(r.stages[2] == StageReport{Stage::FindThreshold, 256, 771, 2.57});
    CHECK(r.stages[3] == StageReport{Stage::GenCumuHist, 51, 159, 0.53});
    CHECK(r.stages[4] == StageReport{Stage::CreateMap, 51, 159, 0.53});
    CHECK(r.stages[5] == StageReport{Stage::GenCumuHist, 205, 621, 2.07});
    CHECK(r.stages[6] == StageReport{Stage::CreateMap, 205, 621, 2.07});

    CHECK(r.map == mmbebhe::mmbebhe(corpus::e1()));
}

TEST_CASE("top threshold skips the upper segment") {
    const GrayImage image(4, 2, {0, 0, 0, 0, 255, 255, 255, 255});
    const SimulationResult r = simulate(image);
    REQUIRE(r.stages.size() == 5);
    CHECK(r.stages[3].stage == Stage::GenCumuHist);
    CHECK(r.stages[3].iterations == 256);
    CHECK(r.stages[3].cycles == 774);
    CHECK(r.stages[4].stage == Stage::CreateMap);
    CHECK(r.stages[4].cycles == 774);
    CHECK(r.map == mmbebhe::mmbebhe(image));
}

TEST_CASE("wall time scales inversely with the clock") {
    CycleModel slow;
    slow.clock_mhz = 150.0;
    const SimulationResult fast = simulate(corpus::e1());
    const SimulationResult half = simulate(corpus::e1(), slow);
    REQUIRE(fast.stages.size() == half.stages.size());
    for (std::size_t i = 0; i < fast.stages.size(); ++i) {
        CHECK(half.stages[i].cycles == fast.stages[i].cycles);
        CHECK(half.stages[i].micros == doctest::Approx(2.0 * fast.stages[i].micros));
        CHECK(fast.stages[i].micros ==
              doctest::Approx(static_cast<double>(fast.stages[i].cycles) / 300.0));
    }
}

TEST_CASE("simulation never alters the produced map") {
    int checked = 0;
    for (const auto& [name, image] : corpus::benchmark()) {
        if (++checked > 12) {
            break;
        }
        CAPTURE(name);
        CHECK(simulate(image).map == mmbebhe::mmbebhe(image));
    }
}
