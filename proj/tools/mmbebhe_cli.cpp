// Command line front end: enhance, threshold, compare, simulate, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmbebhe/core.hpp"
#include "mmbebhe/equalize.hpp"
#include "mmbebhe/hwsim.hpp"
#include "mmbebhe/imgio.hpp"
#include "mmbebhe/oracle.hpp"
#include "mmbebhe/smbe.hpp"

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw mmbebhe::Error("cannot open '" + path + "'");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw mmbebhe::Error("failed reading '" + path + "'");
    }
    return bytes;
}

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw mmbebhe::Error("cannot create '" + path + "'");
    }
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) {
        throw mmbebhe::Error("failed writing '" + path + "'");
    }
}

mmbebhe::GrayImage load_image(const std::string& path) {
    const auto bytes = read_file(path);
    return mmbebhe::read_pgm(bytes);
}

int run_enhance(const std::string& input, const std::string& output,
                const std::string& map_path, const std::string& hist_path) {
    const mmbebhe::GrayImage image = load_image(input);
    const mmbebhe::PixelMap map = mmbebhe::mmbebhe(image);
    const mmbebhe::GrayImage enhanced = mmbebhe::apply_map(image, map);

    const auto pgm = mmbebhe::write_pgm(enhanced);
    write_file(output, pgm.data(), pgm.size());

    if (!map_path.empty()) {
        const std::string text = mmbebhe::write_map_file(map);
        write_file(map_path, text.data(), text.size());
    }
    if (!hist_path.empty()) {
        const std::string csv = mmbebhe::write_hist_csv(mmbebhe::generate_hist(image));
        write_file(hist_path, csv.data(), csv.size());
    }
    return 0;
}

int run_threshold(const std::string& input) {
    const mmbebhe::GrayImage image = load_image(input);
    const mmbebhe::Threshold t =
        mmbebhe::find_threshold(mmbebhe::calculate_smbe(mmbebhe::generate_hist(image)));
    std::cout << "threshold=" << static_cast<int>(t.value) << " smbe=" << t.smbe << "\n";
    return 0;
}

int run_compare(const std::string& input) {
    using mmbebhe::Rational;
    const mmbebhe::GrayImage image = load_image(input);

    const mmbebhe::GrayImage he_out = mmbebhe::apply_map(image, mmbebhe::he_map(image));
    const mmbebhe::GrayImage mm_out = mmbebhe::apply_map(image, mmbebhe::mmbebhe(image));

    const auto mean_of = [](const mmbebhe::GrayImage& img) {
        std::int64_t sum = 0;
        for (std::uint8_t p : img.pixels()) {
            sum += p;
        }
        return Rational(sum, static_cast<std::int64_t>(img.pixel_count()));
    };

    struct Row {
        std::string method;
        Rational mean;
        Rational error;
    };
    const Row rows[3] = {
        {"he", mean_of(he_out), mmbebhe::ambe(image, he_out)},
        {"mmbebhe", mean_of(mm_out), mmbebhe::ambe(image, mm_out)},
        {"identity", mean_of(image), Rational(0)},
    };

    std::size_t method_w = std::string("method").size();
    std::size_t mean_w = std::string("output_mean").size();
    for (const Row& r : rows) {
        method_w = std::max(method_w, r.method.size());
        mean_w = std::max(mean_w, r.mean.to_decimal().size());
    }
    const auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size() + 2, ' ');
    };
    std::cout << pad("method", method_w) << pad("output_mean", mean_w) << "ambe\n";
    for (const Row& r : rows) {
        std::cout << pad(r.method, method_w) << pad(r.mean.to_decimal(), mean_w)
                  << r.error.to_decimal() << "\n";
    }
    return 0;
}

int run_simulate(const std::string& input, double clock_mhz, const std::string& csv_path) {
    const mmbebhe::GrayImage image = load_image(input);
    mmbebhe::CycleModel model;
    model.clock_mhz = clock_mhz;
    const mmbebhe::SimulationResult result = mmbebhe::simulate(image, model);
    std::cout << mmbebhe::format_stage_table(result.stages);
    if (!csv_path.empty()) {
        const std::string csv = mmbebhe::write_timing_csv(result.stages);
        write_file(csv_path, csv.data(), csv.size());
    }
    return 0;
}

int run_verify(const std::string& input) {
    const mmbebhe::GrayImage image = load_image(input);
    const mmbebhe::VerifyResult result = mmbebhe::verify_integer_vs_reference(image);
    if (!result.ok) {
        std::cout << "mismatch at gray level " << result.first_bad_gray << ": " << result.detail
                  << "\n";
        return 1;
    }
    const mmbebhe::PixelMap map = mmbebhe::mmbebhe(image);
    std::cout << "ok: integer map matches exact reference (threshold="
              << static_cast<int>(map.threshold) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brightness-preserving contrast enhancement (integer-only bi-histogram "
                 "equalization with minimum mean brightness error)"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string map_path;
    std::string hist_path;
    std::string csv_path;
    double clock_mhz = 300.0;

    CLI::App* enhance = app.add_subcommand("enhance", "Enhance a PGM image");
    enhance->add_option("input", input, "Input PGM (P5 or P2, maxval 255)")->required();
    enhance->add_option("-o,--output", output, "Output PGM path")->required();
    enhance->add_option("--emit-map", map_path, "Also write the gray-level map");
    enhance->add_option("--emit-hist", hist_path, "Also write the input histogram CSV");

    CLI::App* threshold = app.add_subcommand("threshold", "Print the split threshold and its SMBE");
    threshold->add_option("input", input, "Input PGM")->required();

    CLI::App* compare =
        app.add_subcommand("compare", "Compare mean brightness drift of HE and MMBEBHE");
    compare->add_option("input", input, "Input PGM")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "Print the staged pipeline timing model");
    simulate->add_option("input", input, "Input PGM")->required();
    simulate->add_option("--clock-mhz", clock_mhz, "Clock frequency in MHz")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--csv", csv_path, "Also write the timing rows as CSV");

    CLI::App* verify =
        app.add_subcommand("verify", "Check the integer pipeline against the exact reference");
    verify->add_option("input", input, "Input PGM")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (enhance->parsed()) {
            return run_enhance(input, output, map_path, hist_path);
        }
        if (threshold->parsed()) {
            return run_threshold(input);
        }
        if (compare->parsed()) {
            return run_compare(input);
        }
        if (simulate->parsed()) {
            return run_simulate(input, clock_mhz, csv_path);
        }
        if (verify->parsed()) {
            return run_verify(input);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
