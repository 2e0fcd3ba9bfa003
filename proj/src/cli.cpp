#include "wami/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "wami/eval.hpp"
#include "wami/ground_truth.hpp"
#include "wami/pnm.hpp"
#include "wami/report.hpp"
#include "wami/schemes.hpp"
#include "wami/synth.hpp"

namespace fs = std::filesystem;

namespace wami::cli {

namespace {

struct SchemeFlags {
    int low = 5;
    int high = 160;
    std::string se_shape = "";  // empty = scheme default
    int se_radius = -1;
    int median_window = 3;
    double area_fraction = 0.05;
    double aspect_min = 0.2;
    double si_min = -1.0;  // < 0 = derive from GT
    int area_max = 2000;
};

StructuringElement make_se(const std::string& shape, int radius) {
    if (shape == "square") return StructuringElement::square(radius);
    if (shape == "disk") return StructuringElement::disk(radius);
    throw ParameterError("unknown structuring element shape '" + shape + "'");
}

SchemeSpec make_scheme(const std::string& name, const SchemeFlags& f) {
    auto se = [&](const std::string& default_shape, int default_radius) {
        return make_se(f.se_shape.empty() ? default_shape : f.se_shape,
                       f.se_radius < 0 ? default_radius : f.se_radius);
    };
    if (name == "noop") return NoOp{};
    if (name == "proposed") return Proposed{f.low, f.high, se("square", 1)};
    if (name == "filtered-dilation")
        return FilteredDilation{f.median_window, se("square", 1)};
    if (name == "heuristic")
        return HeuristicFiltering{f.area_fraction, f.aspect_min};
    if (name == "shape-index") {
        ShapeIndexFiltering s;
        if (f.si_min >= 0.0) s.si_min = f.si_min;
        return s;
    }
    if (name == "sieve-open") return SieveAndOpen{f.area_max, se("disk", 5)};
    throw ParameterError("unknown scheme '" + name + "'");
}

bool scheme_needs_gt(const SchemeSpec& spec) {
    if (std::holds_alternative<HeuristicFiltering>(spec)) return true;
    if (const auto* si = std::get_if<ShapeIndexFiltering>(&spec))
        return !si->si_min.has_value();
    return false;
}

void add_scheme_flags(CLI::App* cmd, SchemeFlags& f) {
    cmd->add_option("--low", f.low, "sieve lower area bound");
    cmd->add_option("--high", f.high, "sieve upper area bound");
    cmd->add_option("--se-shape", f.se_shape, "structuring element: square|disk");
    cmd->add_option("--se-radius", f.se_radius, "structuring element radius");
    cmd->add_option("--median-window", f.median_window,
                    "median filter window (odd)");
    cmd->add_option("--area-fraction", f.area_fraction,
                    "heuristic area cutoff as fraction of largest GT object");
    cmd->add_option("--aspect-min", f.aspect_min, "heuristic aspect floor");
    cmd->add_option("--si-min", f.si_min,
                    "shape index floor (omit to derive from GT)");
    cmd->add_option("--area-max", f.area_max, "sieve-open upper area bound");
}

int frame_index_of(const fs::path& file) {
    const std::string stem = file.stem().string();
    const size_t digit = stem.find_first_of("0123456789");
    if (digit == std::string::npos)
        throw FormatError(file.string() + ": no frame index in file name");
    return std::stoi(stem.substr(digit));
}

std::string frame_name(const char* prefix, int frame) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s_%04d.pbm", prefix, frame);
    return buf;
}

void run_apply(const std::string& in_path, const std::string& out_path,
               const std::string& scheme_name, const SchemeFlags& flags,
               const std::string& gt_path, bool invert) {
    const BinaryMask mask = read_mask(in_path, invert);
    const SchemeSpec spec = make_scheme(scheme_name, flags);
    GroundTruthContext ctx;
    if (scheme_needs_gt(spec)) {
        if (gt_path.empty())
            throw ContextError("scheme '" + scheme_name + "' requires --gt");
        GroundTruthSet gt =
            read_ground_truth(gt_path, mask.width(), mask.height());
        for (auto& [frame, comps] : gt)
            for (Component& c : comps) {
                c.label = static_cast<int>(ctx.gt_components.size()) + 1;
                ctx.gt_components.push_back(std::move(c));
            }
    }
    write_mask(apply_scheme(mask, spec, &ctx), out_path);
}

FrameRow evaluate_frame(int frame, const std::string& scheme_name,
                        const BinaryMask& det,
                        const std::vector<Component>& gt) {
    const LabelResult labeled = label_components(det, 8);
    const MatchResult match =
        match_detections(labeled.components, gt, det.width(), det.height());
    FrameRow row;
    row.frame = frame;
    row.scheme = scheme_name;
    row.tp = match.tp;
    row.fn = match.fn;
    row.fp = match.fp;
    row.metrics = compute_metrics(match);
    return row;
}

void run_eval(const std::string& det_path, const std::string& gt_path,
              const std::string& format, int frame, bool invert) {
    const BinaryMask det = read_mask(det_path, invert);
    GroundTruthSet gt = read_ground_truth(gt_path, det.width(), det.height());
    const FrameRow row = evaluate_frame(frame, "eval", det, gt[frame]);
    EvalReport report;
    report.per_frame.push_back(row);
    report.summary = summarize_report(report.per_frame);
    if (format == "csv")
        write_report_csv(report, std::cout);
    else if (format == "json")
        write_report_json(report, std::cout);
    else
        throw ParameterError("unknown format '" + format + "'");
}

void run_compare(const std::string& frames_dir, const std::string& gt_path,
                 const std::string& schemes_csv, const std::string& out_path,
                 const SchemeFlags& flags, const std::string& format,
                 bool invert) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(frames_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (files.empty()) throw IoError("no detection masks in " + frames_dir);
    std::map<int, fs::path> by_frame;
    for (const fs::path& file : files) by_frame[frame_index_of(file)] = file;

    std::vector<std::string> scheme_names;
    std::stringstream ss(schemes_csv);
    std::string name;
    while (std::getline(ss, name, ',')) scheme_names.push_back(name);
    if (scheme_names.empty()) throw ParameterError("no schemes given");

    GroundTruthSet gt;
    bool gt_loaded = false;
    EvalReport report;
    for (const std::string& scheme_name : scheme_names) {
        const SchemeSpec spec = make_scheme(scheme_name, flags);
        for (const auto& [frame, file] : by_frame) {
            const BinaryMask det = read_mask(file.string(), invert);
            if (!gt_loaded) {
                gt = read_ground_truth(gt_path, det.width(), det.height());
                gt_loaded = true;
            }
            GroundTruthContext ctx{gt[frame]};
            const BinaryMask processed = apply_scheme(det, spec, &ctx);
            report.per_frame.push_back(
                evaluate_frame(frame, scheme_name, processed, gt[frame]));
        }
    }
    report.summary = summarize_report(report.per_frame);
    if (out_path.empty() || out_path == "-") {
        if (format == "json")
            write_report_json(report, std::cout);
        else
            write_report_csv(report, std::cout);
    } else {
        write_report(report, out_path, format);
    }
}

void run_synth(uint64_t seed, int frames, const std::string& out_dir,
               const SceneParams& base) {
    fs::create_directories(fs::path(out_dir) / "det");
    fs::create_directories(fs::path(out_dir) / "gt");
    std::vector<GroundTruthRecord> records;
    for (int f = 0; f < frames; ++f) {
        SceneParams params = base;
        params.seed = seed + static_cast<uint64_t>(f);
        const Scene scene = generate_scene(params);
        write_mask(scene.det_mask,
                   (fs::path(out_dir) / "det" / frame_name("det", f)).string());
        write_mask(scene.gt_mask,
                   (fs::path(out_dir) / "gt" / frame_name("gt", f)).string());
        for (const Rect& r : scene.gt_rects) records.push_back({f, r});
    }
    write_ground_truth_csv(records, (fs::path(out_dir) / "gt.csv").string());
}

void run_overlay(const std::string& det_path, const std::string& gt_path,
                 const std::string& out_path, int frame, bool invert) {
    const BinaryMask det = read_mask(det_path, invert);
    GroundTruthSet gt = read_ground_truth(gt_path, det.width(), det.height());
    const LabelResult labeled = label_components(det, 8);
    const MatchResult match =
        match_detections(labeled.components, gt[frame], det.width(), det.height());
    render_overlay(det, gt[frame], match, out_path);
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Detection post-processing schemes and overlap evaluation "
                 "for wide-area aerial imagery"};
    app.require_subcommand(1);

    SchemeFlags flags;
    bool invert = false;
    std::string scheme_name = "proposed";
    std::string in_path, out_path, det_path, gt_path;
    std::string format = "csv";
    int frame = 0;

    CLI::App* apply = app.add_subcommand("apply", "apply a scheme to a mask");
    apply->add_option("input", in_path, "input mask (P1/P4)")->required();
    apply->add_option("output", out_path, "output mask (P4)")->required();
    apply->add_option("--scheme", scheme_name,
                      "noop|proposed|filtered-dilation|heuristic|shape-index|"
                      "sieve-open");
    apply->add_option("--gt", gt_path, "ground truth (CSV or mask dir)");
    apply->add_flag("--invert", invert, "invert mask polarity on read");
    add_scheme_flags(apply, flags);

    CLI::App* eval = app.add_subcommand("eval", "evaluate one detection mask");
    eval->add_option("--det", det_path)->required();
    eval->add_option("--gt", gt_path)->required();
    eval->add_option("--format", format, "csv|json");
    eval->add_option("--frame", frame, "frame index in the GT file");
    eval->add_flag("--invert", invert);

    std::string frames_dir, schemes_csv = "noop,proposed";
    CLI::App* compare =
        app.add_subcommand("compare", "evaluate schemes over a frame set");
    compare->add_option("--frames-dir", frames_dir, "directory of detection masks")
        ->required();
    compare->add_option("--gt", gt_path)->required();
    compare->add_option("--schemes", schemes_csv, "comma-separated scheme names");
    compare->add_option("--out", out_path, "report path ('-' for stdout)");
    compare->add_option("--format", format, "csv|json");
    compare->add_flag("--invert", invert);
    add_scheme_flags(compare, flags);

    SceneParams scene;
    uint64_t seed = 0;
    int frames = 1;
    CLI::App* synth = app.add_subcommand("synth", "generate synthetic frames");
    synth->add_option("--seed", seed);
    synth->add_option("--frames", frames);
    synth->add_option("--out-dir", out_path)->required();
    synth->add_option("--width", scene.width);
    synth->add_option("--height", scene.height);
    synth->add_option("--vehicles", scene.n_vehicles);
    synth->add_option("--area-min", scene.vehicle_area_min);
    synth->add_option("--area-max", scene.vehicle_area_max);
    synth->add_option("--min-separation", scene.min_separation);
    synth->add_option("--p-miss", scene.corruption.p_miss);
    synth->add_option("--p-split", scene.corruption.p_split);
    synth->add_option("--jitter", scene.corruption.boundary_jitter);
    synth->add_option("--small-clutter", scene.corruption.n_small_clutter);
    synth->add_option("--large-clutter", scene.corruption.n_large_clutter);

    CLI::App* overlay = app.add_subcommand("overlay", "write a P6 match overlay");
    overlay->add_option("--det", det_path)->required();
    overlay->add_option("--gt", gt_path)->required();
    overlay->add_option("--out", out_path)->required();
    overlay->add_option("--frame", frame);
    overlay->add_flag("--invert", invert);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (apply->parsed())
            run_apply(in_path, out_path, scheme_name, flags, gt_path, invert);
        else if (eval->parsed())
            run_eval(det_path, gt_path, format, frame, invert);
        else if (compare->parsed())
            run_compare(frames_dir, gt_path, schemes_csv, out_path, flags,
                        format, invert);
        else if (synth->parsed())
            run_synth(seed, frames, out_path, scene);
        else if (overlay->parsed())
            run_overlay(det_path, gt_path, out_path, frame, invert);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ContextError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace wami::cli
