#pragma once

#include <vector>

#include "wami/mask.hpp"

namespace wami {

struct MatchPair {
    int detection_label = 0;
    int gt_label = 0;
    int overlap_pixels = 0;
};

/// Outcome of overlap matching for one frame. Pairs are one-to-one in
/// both label columns; tp == pairs.size().
struct MatchResult {
    int tp = 0;
    int fn = 0;  // GT objects intersecting no detection
    int fp = 0;  // detections intersecting no GT object
    std::vector<MatchPair> pairs;
    // Detections that intersect GT but were not chosen as a TP pair
    // (the GT they touched was claimed by a larger overlap).
    std::vector<int> unmatched_overlapping;
};

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double fscore = 0.0;
    double pwc = 0.0;  // percentage in [0, 100]
};

struct SummaryStats {
    double mean = 0.0;
    double ci95_halfwidth = 0.0;
    int n = 0;
};

/// Classify detections against ground truth by pixel overlap.
/// TP pairs are chosen greedily in descending overlap, ties broken by
/// smaller gt label then smaller detection label; each detection and each
/// GT object is usable at most once. A detection with zero overlap against
/// every GT object is an FP; a GT object with zero overlap against every
/// detection is an FN.
MatchResult match_detections(const std::vector<Component>& detections,
                             const std::vector<Component>& gt,
                             int width, int height);

/// precision = tp/(tp+fp), recall = tp/(tp+fn), F-score their harmonic
/// mean, PWC = 100*(fp+fn)/(tp+fp+fn). Degenerate denominators: empty
/// claims count as vacuously correct (precision/recall 1, pwc 0).
Metrics compute_metrics(int tp, int fn, int fp);
Metrics compute_metrics(const MatchResult& m);

/// Mean and two-sided 95% Student-t confidence half-width
/// (sample stddev with n-1 divisor). n == 1 yields half-width 0.
SummaryStats summarize(const std::vector<double>& per_frame_values);

}  // namespace wami
