#pragma once

#include <string>

#include "wami/eval.hpp"
#include "wami/mask.hpp"

namespace wami {

/// Read a netpbm bitmap, P1 (ASCII) or P4 (packed). netpbm value 1 =
/// black = foreground; pass invert = true for detector dumps using the
/// opposite convention.
BinaryMask read_mask(const std::string& path, bool invert = false);

/// Write a P4 bitmap: header "P4\n<width> <height>\n", rows packed
/// MSB-first and padded to a byte boundary.
void write_mask(const BinaryMask& mask, const std::string& path);

/// P6 overlay of a match result: matched-TP detection pixels green, FP
/// detection pixels red, FN ground-truth pixels blue,
/// unmatched-overlapping detections yellow, background black.
void render_overlay(const BinaryMask& det,
                    const std::vector<Component>& gt_components,
                    const MatchResult& match, const std::string& path);

}  // namespace wami
