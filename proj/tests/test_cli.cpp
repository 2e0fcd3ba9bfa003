#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "wami/cli.hpp"
#include "wami/ground_truth.hpp"
#include "wami/pnm.hpp"
#include "wami/report.hpp"
#include "wami/schemes.hpp"

using namespace wami;
namespace fs = std::filesystem;

namespace {

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"wami"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("wami_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

}  // namespace

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli({"no-such-subcommand"}) == 1);
    CHECK(run_cli({"apply"}) == 1);  // missing positionals
    CHECK(run_cli({"eval", "--det", "x.pbm"}) == 1);  // missing --gt
}

TEST_CASE("I/O errors exit with code 2") {
    TempDir tmp;
    CHECK(run_cli({"apply", tmp.file("missing.pbm").c_str(),
                   tmp.file("out.pbm").c_str()}) == 2);
}

TEST_CASE("apply runs the proposed pipeline") {
    TempDir tmp;
    BinaryMask mask(64, 48);
    fill_rect(mask, {10, 10, 5, 10});  // area 50, kept
    mask.set(2, 2, 1);                 // isolated pixel, sieved out
    fill_rect(mask, {30, 5, 15, 15});  // area 225 > 160, sieved out
    write_mask(mask, tmp.file("in.pbm"));

    CHECK(run_cli({"apply", "--scheme", "proposed", "--low", "5", "--high",
                   "160", "--se-radius", "1", tmp.file("in.pbm").c_str(),
                   tmp.file("out.pbm").c_str()}) == 0);
    const BinaryMask out = read_mask(tmp.file("out.pbm"));
    BinaryMask sieved(64, 48);
    fill_rect(sieved, {10, 10, 5, 10});
    CHECK(out == close(sieved, StructuringElement::square(1)));
}

TEST_CASE("apply with a GT-backed scheme requires --gt") {
    TempDir tmp;
    BinaryMask mask(32, 32);
    fill_rect(mask, {4, 4, 4, 8});
    write_mask(mask, tmp.file("in.pbm"));
    CHECK(run_cli({"apply", "--scheme", "heuristic", tmp.file("in.pbm").c_str(),
                   tmp.file("out.pbm").c_str()}) == 1);

    std::ofstream(tmp.file("gt.csv"))
        << "frame,row,col,height,width\n0,4,4,4,8\n";
    CHECK(run_cli({"apply", "--scheme", "heuristic", "--gt",
                   tmp.file("gt.csv").c_str(), tmp.file("in.pbm").c_str(),
                   tmp.file("out.pbm").c_str()}) == 0);
    CHECK(read_mask(tmp.file("out.pbm")) == mask);
}

TEST_CASE("synth / compare / eval / overlay end to end") {
    TempDir tmp;
    const std::string out_dir = tmp.file("run");
    CHECK(run_cli({"synth", "--seed", "7", "--frames", "4", "--out-dir",
                   out_dir.c_str()}) == 0);
    CHECK(fs::exists(fs::path(out_dir) / "gt.csv"));
    CHECK(fs::exists(fs::path(out_dir) / "det" / "det_0000.pbm"));
    CHECK(fs::exists(fs::path(out_dir) / "gt" / "gt_0003.pbm"));

    SUBCASE("synth is deterministic across runs") {
        const std::string out2 = tmp.file("run2");
        CHECK(run_cli({"synth", "--seed", "7", "--frames", "4", "--out-dir",
                       out2.c_str()}) == 0);
        for (int f = 0; f < 4; ++f) {
            char name[32];
            std::snprintf(name, sizeof(name), "det_%04d.pbm", f);
            CHECK(read_mask((fs::path(out_dir) / "det" / name).string()) ==
                  read_mask((fs::path(out2) / "det" / name).string()));
        }
    }

    SUBCASE("compare writes a recomputable report") {
        const std::string report_path = tmp.file("report.csv");
        CHECK(run_cli({"compare", "--frames-dir",
                       (fs::path(out_dir) / "det").string().c_str(), "--gt",
                       (fs::path(out_dir) / "gt.csv").string().c_str(),
                       "--schemes", "noop,proposed,sieve-open", "--out",
                       report_path.c_str()}) == 0);
        std::ifstream in(report_path);
        const EvalReport report = read_report_csv(in);
        CHECK(report.per_frame.size() == 3 * 4);
        CHECK(report.summary.size() == 3 * 4);  // 4 metrics per scheme
        // summary rows match a recomputation from the per-frame rows
        const auto recomputed = summarize_report(report.per_frame);
        for (size_t i = 0; i < recomputed.size(); ++i) {
            CHECK(std::abs(recomputed[i].mean - report.summary[i].mean) < 1e-6);
            CHECK(std::abs(recomputed[i].ci95_halfwidth -
                           report.summary[i].ci95_halfwidth) < 1e-6);
        }
        // frames are reported in ascending order per scheme
        for (size_t i = 1; i < report.per_frame.size(); ++i)
            if (report.per_frame[i].scheme == report.per_frame[i - 1].scheme)
                CHECK(report.per_frame[i].frame >
                      report.per_frame[i - 1].frame);
    }

    SUBCASE("eval and overlay run on one frame") {
        CHECK(run_cli({"eval", "--det",
                       (fs::path(out_dir) / "det" / "det_0000.pbm")
                           .string()
                           .c_str(),
                       "--gt", (fs::path(out_dir) / "gt.csv").string().c_str(),
                       "--format", "json"}) == 0);
        CHECK(run_cli({"overlay", "--det",
                       (fs::path(out_dir) / "det" / "det_0000.pbm")
                           .string()
                           .c_str(),
                       "--gt", (fs::path(out_dir) / "gt.csv").string().c_str(),
                       "--out", tmp.file("overlay.ppm").c_str()}) == 0);
        CHECK(fs::exists(tmp.file("overlay.ppm")));
    }
}
