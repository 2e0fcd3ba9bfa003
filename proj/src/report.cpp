#include "wami/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wami/errors.hpp"

namespace wami {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

double parse_double(const std::string& s, int line_no) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FormatError("report line " + std::to_string(line_no) +
                          ": bad number '" + s + "'");
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

constexpr const char* kFrameHeader =
    "frame,scheme,tp,fn,fp,precision,recall,fscore,pwc";
constexpr const char* kSummaryHeader = "scheme,metric,mean,ci95_halfwidth,n";

}  // namespace

std::vector<SummaryRow> summarize_report(const std::vector<FrameRow>& per_frame) {
    // Preserve first-appearance order of schemes.
    std::vector<std::string> schemes;
    std::map<std::string, std::map<std::string, std::vector<double>>> samples;
    for (const FrameRow& row : per_frame) {
        if (!samples.count(row.scheme)) schemes.push_back(row.scheme);
        auto& by_metric = samples[row.scheme];
        by_metric["precision"].push_back(row.metrics.precision);
        by_metric["recall"].push_back(row.metrics.recall);
        by_metric["fscore"].push_back(row.metrics.fscore);
        by_metric["pwc"].push_back(row.metrics.pwc);
    }
    std::vector<SummaryRow> summary;
    for (const std::string& scheme : schemes)
        for (const char* metric : {"precision", "recall", "fscore", "pwc"}) {
            const SummaryStats s = summarize(samples[scheme][metric]);
            summary.push_back({scheme, metric, s.mean, s.ci95_halfwidth, s.n});
        }
    return summary;
}

void write_report_csv(const EvalReport& report, std::ostream& out) {
    out << kFrameHeader << "\n";
    for (const FrameRow& r : report.per_frame)
        out << r.frame << "," << r.scheme << "," << r.tp << "," << r.fn << ","
            << r.fp << "," << fmt(r.metrics.precision) << ","
            << fmt(r.metrics.recall) << "," << fmt(r.metrics.fscore) << ","
            << fmt(r.metrics.pwc) << "\n";
    out << "\n" << kSummaryHeader << "\n";
    for (const SummaryRow& r : report.summary)
        out << r.scheme << "," << r.metric << "," << fmt(r.mean) << ","
            << fmt(r.ci95_halfwidth) << "," << r.n << "\n";
}

void write_report_json(const EvalReport& report, std::ostream& out) {
    nlohmann::json j;
    j["per_frame"] = nlohmann::json::array();
    for (const FrameRow& r : report.per_frame)
        j["per_frame"].push_back({{"frame", r.frame},
                                  {"scheme", r.scheme},
                                  {"tp", r.tp},
                                  {"fn", r.fn},
                                  {"fp", r.fp},
                                  {"precision", fmt(r.metrics.precision)},
                                  {"recall", fmt(r.metrics.recall)},
                                  {"fscore", fmt(r.metrics.fscore)},
                                  {"pwc", fmt(r.metrics.pwc)}});
    j["summary"] = nlohmann::json::array();
    for (const SummaryRow& r : report.summary)
        j["summary"].push_back({{"scheme", r.scheme},
                                {"metric", r.metric},
                                {"mean", fmt(r.mean)},
                                {"ci95_halfwidth", fmt(r.ci95_halfwidth)},
                                {"n", r.n}});
    out << j.dump(2) << "\n";
}

void write_report(const EvalReport& report, const std::string& path,
                  const std::string& format) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    if (format == "csv")
        write_report_csv(report, out);
    else if (format == "json")
        write_report_json(report, out);
    else
        throw ParameterError("unknown report format '" + format + "'");
    if (!out) throw IoError("write failed for " + path);
}

EvalReport read_report_csv(std::istream& in) {
    EvalReport report;
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line) || line != kFrameHeader)
        throw FormatError("report: missing per-frame header");
    ++line_no;
    bool in_summary = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line == kSummaryHeader) {
            in_summary = true;
            continue;
        }
        const auto f = split_csv(line);
        if (!in_summary) {
            if (f.size() != 9)
                throw FormatError("report line " + std::to_string(line_no) +
                                  ": expected 9 fields");
            FrameRow r;
            r.frame = static_cast<int>(parse_double(f[0], line_no));
            r.scheme = f[1];
            r.tp = static_cast<int>(parse_double(f[2], line_no));
            r.fn = static_cast<int>(parse_double(f[3], line_no));
            r.fp = static_cast<int>(parse_double(f[4], line_no));
            r.metrics.precision = parse_double(f[5], line_no);
            r.metrics.recall = parse_double(f[6], line_no);
            r.metrics.fscore = parse_double(f[7], line_no);
            r.metrics.pwc = parse_double(f[8], line_no);
            report.per_frame.push_back(std::move(r));
        } else {
            if (f.size() != 5)
                throw FormatError("report line " + std::to_string(line_no) +
                                  ": expected 5 fields");
            SummaryRow r;
            r.scheme = f[0];
            r.metric = f[1];
            r.mean = parse_double(f[2], line_no);
            r.ci95_halfwidth = parse_double(f[3], line_no);
            r.n = static_cast<int>(parse_double(f[4], line_no));
            report.summary.push_back(std::move(r));
        }
    }
    return report;
}

EvalReport read_report_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw FormatError(std::string("report JSON: ") + ex.what());
    }
    EvalReport report;
    for (const auto& e : j.at("per_frame")) {
        FrameRow r;
        r.frame = e.at("frame").get<int>();
        r.scheme = e.at("scheme").get<std::string>();
        r.tp = e.at("tp").get<int>();
        r.fn = e.at("fn").get<int>();
        r.fp = e.at("fp").get<int>();
        r.metrics.precision = parse_double(e.at("precision").get<std::string>(), 0);
        r.metrics.recall = parse_double(e.at("recall").get<std::string>(), 0);
        r.metrics.fscore = parse_double(e.at("fscore").get<std::string>(), 0);
        r.metrics.pwc = parse_double(e.at("pwc").get<std::string>(), 0);
        report.per_frame.push_back(std::move(r));
    }
    for (const auto& e : j.at("summary")) {
        SummaryRow r;
        r.scheme = e.at("scheme").get<std::string>();
        r.metric = e.at("metric").get<std::string>();
        r.mean = parse_double(e.at("mean").get<std::string>(), 0);
        r.ci95_halfwidth = parse_double(e.at("ci95_halfwidth").get<std::string>(), 0);
        r.n = e.at("n").get<int>();
        report.summary.push_back(std::move(r));
    }
    return report;
}

}  // namespace wami
