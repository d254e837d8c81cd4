// End-to-end checks of the command line tool. argv[1] is the tool path.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "mmbebhe/equalize.hpp"
#include "mmbebhe/imgio.hpp"
#include "support/corpus.hpp"
#include "support/spawn.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cout << "FAIL  " << what << "\n";
    }
}

void expect_eq(const std::string& got, const std::string& want, const std::string& what) {
    if (got != want) {
        ++failures;
        std::cout << "FAIL  " << what << "\n  want: " << want << "\n  got:  " << got << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 2;
    }
    const std::string cli = spawn::quoted(argv[1]);
    const std::filesystem::path dir = spawn::make_temp_dir("mmbebhe-cli");

    const std::filesystem::path e1_pgm = dir / "e1.pgm";
    spawn::write_bytes(e1_pgm, mmbebhe::write_pgm(corpus::e1()));
    const std::string e1 = spawn::quoted(e1_pgm);

    {
        const auto r = spawn::run(cli + " threshold " + e1);
        expect(r.exit_code == 0, "threshold exits 0");
        expect_eq(r.out, "threshold=50 smbe=-32\n", "threshold output");
        expect(r.err.empty(), "threshold stderr empty");
    }

    {
        const std::filesystem::path ascii = dir / "e1.ascii.pgm";
        const std::string text = "P2\n4 2\n255\n0 0 0 50 50 100 200 200\n";
        spawn::write_bytes(ascii, {reinterpret_cast<const std::uint8_t*>(text.data()),
                                   text.size()});
        const auto r = spawn::run(cli + " threshold " + spawn::quoted(ascii));
        expect(r.exit_code == 0, "threshold accepts ASCII PGM");
        expect_eq(r.out, "threshold=50 smbe=-32\n", "ASCII and binary PGM agree");
    }

    {
        const std::filesystem::path out = dir / "out.pgm";
        const std::filesystem::path map = dir / "out.map";
        const std::filesystem::path hist = dir / "hist.csv";
        const auto r = spawn::run(cli + " enhance " + e1 + " -o " + spawn::quoted(out) +
                                  " --emit-map " + spawn::quoted(map) + " --emit-hist " +
                                  spawn::quoted(hist));
        expect(r.exit_code == 0, "enhance exits 0");

        const std::string want_pgm("P5\n4 2\n255\n\x1e\x1e\x1e\x32\x32\x77\xff\xff", 19);
        expect_eq(spawn::read_text(out), want_pgm, "enhanced raster bytes");
        expect_eq(spawn::read_text(map), mmbebhe::write_map_file(mmbebhe::mmbebhe(corpus::e1())),
                  "emitted map file");
        const std::string csv = spawn::read_text(hist);
        expect(csv.substr(0, 24) == "value,frequency\n0,3\n1,0\n", "emitted histogram CSV head");

        const auto again = spawn::run(cli + " enhance " + e1 + " -o " + spawn::quoted(out));
        expect(again.exit_code == 0, "enhance reruns cleanly");
        expect_eq(spawn::read_text(out), want_pgm, "enhance is deterministic");
    }

    {
        const auto r = spawn::run(cli + " compare " + e1);
        expect(r.exit_code == 0, "compare exits 0");
        expect_eq(r.out,
                  "method    output_mean  ambe\n"
                  "he        163.375      88.375\n"
                  "mmbebhe   102.375      27.375\n"
                  "identity  75           0\n",
                  "compare table");
    }

    {
        const auto r = spawn::run(cli + " simulate " + e1);
        expect(r.exit_code == 0, "simulate exits 0");
        expect_eq(r.out,
                  "stage           iterations  cycles    micros\n"
                  "generate_hist            8       8  0.026667\n"
                  "calculate_smbe         256     771      2.57\n"
                  "find_threshold         256     771      2.57\n"
                  "gen_cumu_hist           51     159      0.53\n"
                  "create_map              51     159      0.53\n"
                  "gen_cumu_hist          205     621      2.07\n"
                  "create_map             205     621      2.07\n",
                  "simulate table");

        const std::filesystem::path csv = dir / "timing.csv";
        const auto with_csv = spawn::run(cli + " simulate " + e1 + " --csv " + spawn::quoted(csv));
        expect(with_csv.exit_code == 0, "simulate --csv exits 0");
        expect_eq(spawn::read_text(csv),
                  "stage,iterations,cycles,micros\n"
                  "generate_hist,8,8,0.026667\n"
                  "calculate_smbe,256,771,2.57\n"
                  "find_threshold,256,771,2.57\n"
                  "gen_cumu_hist,51,159,0.53\n"
                  "create_map,51,159,0.53\n"
                  "gen_cumu_hist,205,621,2.07\n"
                  "create_map,205,621,2.07\n",
                  "simulate CSV");

        const auto slow = spawn::run(cli + " simulate " + e1 + " --clock-mhz 150");
        expect(slow.exit_code == 0, "simulate honors --clock-mhz");
        expect(slow.out.find("  5.14\n") != std::string::npos,
               "half clock doubles the 2.57 us stages");
    }

    {
        const auto r = spawn::run(cli + " verify " + e1);
        expect(r.exit_code == 0, "verify exits 0 on a clean image");
        expect(r.out.find("ok") == 0, "verify reports ok");
    }

    {
        const auto r = spawn::run(cli + " threshold " + spawn::quoted(dir / "missing.pgm"));
        expect(r.exit_code == 1, "missing input exits 1");
        expect(r.err.rfind("error:", 0) == 0, "missing input writes an error: line");

        const std::filesystem::path bad = dir / "bad.pgm";
        const std::string junk = "P5\n4 2\n255\nxx";
        spawn::write_bytes(bad, {reinterpret_cast<const std::uint8_t*>(junk.data()),
                                 junk.size()});
        const auto mal = spawn::run(cli + " threshold " + spawn::quoted(bad));
        expect(mal.exit_code == 1, "truncated PGM exits 1");
        expect(mal.err.rfind("error:", 0) == 0, "truncated PGM writes an error: line");

        const std::filesystem::path deep = dir / "no" / "such" / "dir" / "x.pgm";
        const auto sink = spawn::run(cli + " enhance " + e1 + " -o " + spawn::quoted(deep));
        expect(sink.exit_code == 1, "unwritable output exits 1");
    }

    {
        const auto r = spawn::run(cli + " frobnicate " + e1);
        expect(r.exit_code == 2, "unknown subcommand exits 2");
        expect(r.err.rfind("usage error:", 0) == 0, "unknown subcommand explains usage");

        const auto none = spawn::run(cli);
        expect(none.exit_code == 2, "missing subcommand exits 2");

        const auto no_out = spawn::run(cli + " enhance " + e1);
        expect(no_out.exit_code == 2, "enhance without -o exits 2");

        const auto bad_clock = spawn::run(cli + " simulate " + e1 + " --clock-mhz 0");
        expect(bad_clock.exit_code == 2, "non-positive clock exits 2");

        const auto help = spawn::run(cli + " --help");
        expect(help.exit_code == 0, "--help exits 0");
        expect(help.out.find("enhance") != std::string::npos, "--help lists subcommands");
    }

    std::filesystem::remove_all(dir);
    if (failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cout << "cli_tests: " << failures << " check(s) failed\n";
    return 1;
}
