#pragma once

#include <cstdint>
#include <vector>

#include "wami/mask.hpp"

namespace wami {

/// splitmix64 stream; bit-exact across platforms so alternate
/// implementations reproduce scenes identically.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Inclusive bounds; modulo bias is acceptable for scene synthesis.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next() %
                                     static_cast<uint64_t>(hi - lo + 1));
    }

    double next_unit() {  // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    uint64_t state_;
};

/// Error injection applied to the ground truth to form a detection mask.
struct CorruptionParams {
    double p_miss = 0.05;      // vehicle absent from the detection
    double p_split = 0.1;      // vehicle loses its middle cross-section
    int boundary_jitter = 1;   // uniform grow/shrink in pixels
    int n_small_clutter = 60;  // spurious blobs of area 1..4
    int n_large_clutter = 2;   // spurious blobs of area > 180
};

struct SceneParams {
    int width = 720;
    int height = 480;
    int n_vehicles = 40;
    int vehicle_area_min = 40;
    int vehicle_area_max = 150;
    double aspect_min = 0.4;  // bbox short/long side ratio
    double aspect_max = 0.8;
    int min_separation = 2;   // Chebyshev gap between vehicle rects
    CorruptionParams corruption;
    uint64_t seed = 0;
};

struct Scene {
    BinaryMask gt_mask;
    std::vector<Rect> gt_rects;
    BinaryMask det_mask;
};

/// Deterministic scene synthesis. All randomness is drawn from one
/// splitmix64 stream in a fixed order: vehicle rects in index order,
/// then per-vehicle corruption in index order, then small clutter,
/// then large clutter.
Scene generate_scene(const SceneParams& params);

/// Apply the corruption model to ground-truth rects: drop with p_miss,
/// grow/shrink by a uniform jitter, split with p_split by clearing the
/// middle cross-section of the long axis; then stamp clutter blobs at
/// positions not overlapping any GT rect.
BinaryMask corrupt_detections(const std::vector<Rect>& gt_rects,
                              const CorruptionParams& cp, SplitMix64& rng,
                              int width, int height);

}  // namespace wami
