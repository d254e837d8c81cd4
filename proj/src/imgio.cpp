#include "mmbebhe/imgio.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace mmbebhe {

namespace {

bool is_pgm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

class TokenReader {
public:
    explicit TokenReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Whitespace and '#'-to-end-of-line comments may appear between tokens.
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (is_pgm_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_separators();
        return pos_ >= bytes_.size();
    }

    std::uint64_t read_uint(const char* field) {
        skip_separators();
        if (pos_ >= bytes_.size() || bytes_[pos_] < '0' || bytes_[pos_] > '9') {
            throw MalformedHeader(std::string("PGM: expected unsigned integer for ") + field);
        }
        std::uint64_t value = 0;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 0xffffffffULL) {
                throw MalformedHeader(std::string("PGM: ") + field + " out of range");
            }
            ++pos_;
        }
        return value;
    }

    std::size_t position() const { return pos_; }
    void advance(std::size_t by) { pos_ += by; }
    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }
    std::uint8_t peek() const { return bytes_[pos_]; }
    bool exhausted() const { return pos_ >= bytes_.size(); }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
        throw MalformedHeader("PGM: magic must be P5 or P2");
    }
    const bool binary = bytes[1] == '5';

    TokenReader reader(bytes.subspan(2));
    const std::uint64_t width = reader.read_uint("width");
    const std::uint64_t height = reader.read_uint("height");
    if (width == 0 || height == 0) {
        throw MalformedHeader("PGM: zero width or height");
    }
    const std::uint64_t maxval = reader.read_uint("maxval");
    if (maxval != 255) {
        throw UnsupportedMaxval("PGM: maxval " + std::to_string(maxval) +
                                " unsupported, only 255 (8-bit) images are accepted");
    }
    const std::uint64_t count = width * height;
    if (count > kMaxPixels) {
        throw ImageTooLarge("PGM: " + std::to_string(count) + " pixels exceed the " +
                            std::to_string(kMaxPixels) + " limit");
    }

    std::vector<std::uint8_t> pixels;
    pixels.reserve(count);
    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        if (reader.exhausted() || !is_pgm_space(reader.peek())) {
            throw MalformedHeader("PGM: missing whitespace before P5 raster");
        }
        reader.advance(1);
        const auto raster = reader.rest();
        if (raster.size() < count) {
            throw TruncatedData("PGM: raster holds " + std::to_string(raster.size()) +
                                " bytes, need " + std::to_string(count));
        }
        pixels.assign(raster.begin(), raster.begin() + static_cast<std::ptrdiff_t>(count));
    } else {
        for (std::uint64_t i = 0; i < count; ++i) {
            if (reader.at_end()) {
                throw TruncatedData("PGM: only " + std::to_string(i) + " of " +
                                    std::to_string(count) + " samples present");
            }
            const std::uint64_t sample = reader.read_uint("sample");
            if (sample > 255) {
                throw MalformedHeader("PGM: sample " + std::to_string(sample) +
                                      " exceeds maxval 255");
            }
            pixels.push_back(static_cast<std::uint8_t>(sample));
        }
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
    const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                               std::to_string(image.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.pixels().begin(), image.pixels().end());
    return out;
}

std::string write_map_file(const PixelMap& map) {
    std::string out = "# threshold=" + std::to_string(map.threshold) + "\n";
    for (int k = 0; k < kGrayLevels; ++k) {
        out += std::to_string(k);
        out += '\t';
        out += std::to_string(map.map[static_cast<std::size_t>(k)]);
        out += '\n';
    }
    return out;
}

namespace {

// Strict decimal parse of a full string, value bounded to [0, 255].
int parse_gray(const std::string& text, const char* what) {
    if (text.empty() || text.size() > 3) {
        throw MalformedHeader(std::string("map file: bad ") + what + " '" + text + "'");
    }
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw MalformedHeader(std::string("map file: bad ") + what + " '" + text + "'");
        }
        value = value * 10 + (c - '0');
    }
    if (value > 255) {
        throw MalformedHeader(std::string("map file: ") + what + " " + text + " out of range");
    }
    return value;
}

}  // namespace

PixelMap read_map_file(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            throw MalformedHeader("map file: final line lacks LF terminator");
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (start != text.size()) {
        throw MalformedHeader("map file: trailing bytes after final line");
    }
    if (lines.size() != kGrayLevels + 1) {
        throw MalformedHeader("map file: expected 257 lines, got " +
                              std::to_string(lines.size()));
    }

    static constexpr const char* kPrefix = "# threshold=";
    if (lines[0].rfind(kPrefix, 0) != 0) {
        throw MalformedHeader("map file: first line must be '# threshold=T'");
    }
    PixelMap map{};
    map.threshold = static_cast<std::uint8_t>(
        parse_gray(lines[0].substr(std::string(kPrefix).size()), "threshold"));

    for (int k = 0; k < kGrayLevels; ++k) {
        const std::string& line = lines[static_cast<std::size_t>(k + 1)];
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw MalformedHeader("map file: line " + std::to_string(k + 2) + " lacks a tab");
        }
        if (parse_gray(line.substr(0, tab), "gray value") != k) {
            throw MalformedHeader("map file: line " + std::to_string(k + 2) +
                                  " is out of order");
        }
        map.map[static_cast<std::size_t>(k)] =
            static_cast<std::uint8_t>(parse_gray(line.substr(tab + 1), "map value"));
    }
    return map;
}

std::string write_hist_csv(const Histogram& hist) {
    std::string out = "value,frequency\n";
    for (int g = 0; g < kGrayLevels; ++g) {
        out += std::to_string(g);
        out += ',';
        out += std::to_string(hist.freq(g));
        out += '\n';
    }
    return out;
}

std::string format_micros(double micros) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", micros);
    std::string s(buf);
    while (!s.empty() && s.back() == '0') {
        s.pop_back();
    }
    if (!s.empty() && s.back() == '.') {
        s.pop_back();
    }
    return s;
}

std::string write_timing_csv(std::span<const StageReport> reports) {
    std::string out = "stage,iterations,cycles,micros\n";
    for (const StageReport& r : reports) {
        out += stage_name(r.stage);
        out += ',';
        out += std::to_string(r.iterations);
        out += ',';
        out += std::to_string(r.cycles);
        out += ',';
        out += format_micros(r.micros);
        out += '\n';
    }
    return out;
}

std::string format_stage_table(std::span<const StageReport> reports) {
    static constexpr const char* kHeaders[4] = {"stage", "iterations", "cycles", "micros"};
    std::vector<std::array<std::string, 4>> rows;
    rows.reserve(reports.size());
    for (const StageReport& r : reports) {
        rows.push_back({std::string(stage_name(r.stage)), std::to_string(r.iterations),
                        std::to_string(r.cycles), format_micros(r.micros)});
    }

    std::array<std::size_t, 4> width{};
    for (int c = 0; c < 4; ++c) {
        width[static_cast<std::size_t>(c)] = std::string(kHeaders[c]).size();
        for (const auto& row : rows) {
            width[static_cast<std::size_t>(c)] =
                std::max(width[static_cast<std::size_t>(c)], row[static_cast<std::size_t>(c)].size());
        }
    }

    const auto emit = [&](const std::array<std::string, 4>& cells) {
        std::string line;
        for (int c = 0; c < 4; ++c) {
            const std::string& cell = cells[static_cast<std::size_t>(c)];
            if (c == 0) {  // stage name left-aligned, numbers right-aligned
                line += cell;
                if (c < 3) {
                    line.append(width[0] - cell.size() + 2, ' ');
                }
            } else {
                line.append(width[static_cast<std::size_t>(c)] - cell.size(), ' ');
                line += cell;
                if (c < 3) {
                    line.append(2, ' ');
                }
            }
        }
        return line + "\n";
    };

    std::string out = emit({std::string(kHeaders[0]), std::string(kHeaders[1]),
                            std::string(kHeaders[2]), std::string(kHeaders[3])});
    for (const auto& row : rows) {
        out += emit(row);
    }
    return out;
}

}  // namespace mmbebhe
