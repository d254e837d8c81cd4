#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mmbebhe/core.hpp"
#include "mmbebhe/equalize.hpp"
#include "mmbebhe/hwsim.hpp"

namespace mmbebhe {

/// Parses binary (P5) or ASCII (P2) PGM with maxval exactly 255. Header
/// whitespace and '#' comments are accepted anywhere between tokens.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Emits P5: "P5\n<width> <height>\n255\n" followed by the raster.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

/// Map file: one "# threshold=T" comment line, then 256 lines of
/// "k<TAB>map[k]" in ascending k. LF endings, 257 lines total.
std::string write_map_file(const PixelMap& map);
PixelMap read_map_file(const std::string& text);

/// Histogram CSV: "value,frequency" header plus 256 rows.
std::string write_hist_csv(const Histogram& hist);

/// Timing CSV: "stage,iterations,cycles,micros" plus one row per report.
std::string write_timing_csv(std::span<const StageReport> reports);

/// Aligned text table of the same rows, for terminal output.
std::string format_stage_table(std::span<const StageReport> reports);

/// Deterministic decimal rendering shared by the timing outputs: six
/// fractional digits, trailing zeros trimmed.
std::string format_micros(double micros);

}  // namespace mmbebhe
