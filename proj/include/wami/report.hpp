#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wami/eval.hpp"

namespace wami {

struct FrameRow {
    int frame = 0;
    std::string scheme;
    int tp = 0;
    int fn = 0;
    int fp = 0;
    Metrics metrics;
};

struct SummaryRow {
    std::string scheme;
    std::string metric;  // precision | recall | fscore | pwc
    double mean = 0.0;
    double ci95_halfwidth = 0.0;
    int n = 0;
};

struct EvalReport {
    std::vector<FrameRow> per_frame;   // sorted by (scheme, frame)
    std::vector<SummaryRow> summary;
};

/// Per-scheme summaries (precision, recall, fscore, pwc over frames)
/// recomputed from the per-frame rows.
std::vector<SummaryRow> summarize_report(const std::vector<FrameRow>& per_frame);

void write_report_csv(const EvalReport& report, std::ostream& out);
void write_report_json(const EvalReport& report, std::ostream& out);
void write_report(const EvalReport& report, const std::string& path,
                  const std::string& format);  // "csv" or "json"

EvalReport read_report_csv(std::istream& in);
EvalReport read_report_json(std::istream& in);

}  // namespace wami
