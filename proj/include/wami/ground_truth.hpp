#pragma once

#include <map>
#include <string>
#include <vector>

#include "wami/mask.hpp"

namespace wami {

/// One ground-truth rectangle of one frame, 0-based, top-left origin.
struct GroundTruthRecord {
    int frame = 0;
    Rect rect;
};

/// Per-frame ground-truth components, keyed by frame index.
using GroundTruthSet = std::map<int, std::vector<Component>>;

/// Parse "frame,row,col,height,width" CSV (header required). Rects are
/// validated against frame_width x frame_height and rendered to
/// components with labels 1..n in file order per frame.
GroundTruthSet read_ground_truth_csv(const std::string& path, int frame_width,
                                     int frame_height);

std::vector<GroundTruthRecord> read_ground_truth_records(const std::string& path,
                                                         int frame_width,
                                                         int frame_height);

/// Directory of per-frame P4/P1 masks; frame index is the first integer
/// in each file name. Masks are labeled with 8-connectivity.
GroundTruthSet read_ground_truth_dir(const std::string& path);

/// CSV file or mask directory, decided by what the path is.
GroundTruthSet read_ground_truth(const std::string& path, int frame_width,
                                 int frame_height);

void write_ground_truth_csv(const std::vector<GroundTruthRecord>& records,
                            const std::string& path);

}  // namespace wami
