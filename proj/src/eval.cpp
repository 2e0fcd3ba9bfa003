#include "wami/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/math/distributions/students_t.hpp>

namespace wami {

MatchResult match_detections(const std::vector<Component>& detections,
                             const std::vector<Component>& gt,
                             int width, int height) {
    // One GT label per grid cell; also validates dimensions.
    std::vector<int> gt_grid(static_cast<size_t>(width) * height, 0);
    auto check = [&](const Component& c) {
        if (c.bbox.min_row < 0 || c.bbox.min_col < 0 ||
            c.bbox.max_row >= height || c.bbox.max_col >= width)
            throw ParameterError("component outside the stated image dimensions");
    };
    for (const Component& g : gt) {
        check(g);
        for (auto [r, c] : g.pixels)
            gt_grid[static_cast<size_t>(r) * width + c] = g.label;
    }

    // Overlap counts per (det label, gt label).
    std::map<std::pair<int, int>, int> overlap;
    std::map<int, bool> det_touches, gt_touched;
    for (const Component& d : detections) {
        check(d);
        det_touches[d.label] = false;
        for (auto [r, c] : d.pixels) {
            const int g = gt_grid[static_cast<size_t>(r) * width + c];
            if (g) ++overlap[{d.label, g}];
        }
    }
    for (const Component& g : gt) gt_touched[g.label] = false;

    struct Candidate {
        int overlap_pixels, gt_label, det_label;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(overlap.size());
    for (const auto& [key, pixels] : overlap) {
        candidates.push_back({pixels, key.second, key.first});
        det_touches[key.first] = true;
        gt_touched[key.second] = true;
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.overlap_pixels != b.overlap_pixels)
                      return a.overlap_pixels > b.overlap_pixels;
                  if (a.gt_label != b.gt_label) return a.gt_label < b.gt_label;
                  return a.det_label < b.det_label;
              });

    MatchResult result;
    std::map<int, bool> det_used, gt_used;
    for (const Candidate& cand : candidates) {
        if (det_used[cand.det_label] || gt_used[cand.gt_label]) continue;
        det_used[cand.det_label] = true;
        gt_used[cand.gt_label] = true;
        result.pairs.push_back({cand.det_label, cand.gt_label, cand.overlap_pixels});
    }
    result.tp = static_cast<int>(result.pairs.size());

    for (const Component& d : detections) {
        if (!det_touches[d.label])
            ++result.fp;
        else if (!det_used[d.label])
            result.unmatched_overlapping.push_back(d.label);
    }
    for (const Component& g : gt)
        if (!gt_touched[g.label]) ++result.fn;
    return result;
}

Metrics compute_metrics(int tp, int fn, int fp) {
    Metrics m;
    m.precision = (tp + fp > 0) ? static_cast<double>(tp) / (tp + fp) : 1.0;
    m.recall = (tp + fn > 0) ? static_cast<double>(tp) / (tp + fn) : 1.0;
    m.fscore = (m.precision + m.recall > 0.0)
                   ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                   : 0.0;
    m.pwc = (tp + fp + fn > 0)
                ? 100.0 * static_cast<double>(fp + fn) / (tp + fp + fn)
                : 0.0;
    return m;
}

Metrics compute_metrics(const MatchResult& m) {
    return compute_metrics(m.tp, m.fn, m.fp);
}

SummaryStats summarize(const std::vector<double>& per_frame_values) {
    if (per_frame_values.empty())
        throw ParameterError("summarize: need at least one sample");
    SummaryStats s;
    s.n = static_cast<int>(per_frame_values.size());
    double sum = 0.0;
    for (double v : per_frame_values) sum += v;
    s.mean = sum / s.n;
    if (s.n == 1) return s;
    double ss = 0.0;
    for (double v : per_frame_values) ss += (v - s.mean) * (v - s.mean);
    const double stddev = std::sqrt(ss / (s.n - 1));
    if (stddev == 0.0) return s;
    boost::math::students_t dist(s.n - 1);
    const double t = boost::math::quantile(dist, 0.975);
    s.ci95_halfwidth = t * stddev / std::sqrt(static_cast<double>(s.n));
    return s;
}

}  // namespace wami
