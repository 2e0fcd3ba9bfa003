#include "wami/synth.hpp"

#include <algorithm>
#include <cmath>

namespace wami {

namespace {

bool separated(const Rect& a, const Rect& b, int gap) {
    return a.row + a.height + gap <= b.row || b.row + b.height + gap <= a.row ||
           a.col + a.width + gap <= b.col || b.col + b.width + gap <= a.col;
}

bool intersects(const Rect& a, const Rect& b) {
    return !separated(a, b, 0);
}

// Draw (height, width) with area in range and short/long ratio in
// [aspect_min, aspect_max]; rounding misses are rejected and redrawn.
bool draw_vehicle_dims(SplitMix64& rng, const SceneParams& p, int& h, int& w) {
    const int area = rng.next_int(p.vehicle_area_min, p.vehicle_area_max);
    const double aspect =
        p.aspect_min + rng.next_unit() * (p.aspect_max - p.aspect_min);
    int short_side = std::max(1, static_cast<int>(std::lround(
                                     std::sqrt(area * aspect))));
    int long_side = std::max(
        1, static_cast<int>(std::lround(static_cast<double>(area) / short_side)));
    if (short_side > long_side) std::swap(short_side, long_side);
    const int a = short_side * long_side;
    if (a < p.vehicle_area_min || a > p.vehicle_area_max) return false;
    const double q = static_cast<double>(short_side) / long_side;
    if (q < p.aspect_min || q > p.aspect_max) return false;
    const bool vertical = rng.next() & 1;
    h = vertical ? long_side : short_side;
    w = vertical ? short_side : long_side;
    return h <= p.height && w <= p.width;
}

void clip_grow(Rect& r, int amount, int width, int height) {
    const int r0 = std::max(0, r.row - amount);
    const int c0 = std::max(0, r.col - amount);
    const int r1 = std::min(height, r.row + r.height + amount);
    const int c1 = std::min(width, r.col + r.width + amount);
    r = {r0, c0, r1 - r0, c1 - c0};
}

}  // namespace

BinaryMask corrupt_detections(const std::vector<Rect>& gt_rects,
                              const CorruptionParams& cp, SplitMix64& rng,
                              int width, int height) {
    BinaryMask det(width, height);

    for (const Rect& gt : gt_rects) {
        if (rng.next_unit() < cp.p_miss) continue;
        const int jitter =
            cp.boundary_jitter > 0
                ? rng.next_int(-cp.boundary_jitter, cp.boundary_jitter)
                : 0;
        const bool split = rng.next_unit() < cp.p_split;

        Rect r = gt;
        if (jitter > 0) {
            clip_grow(r, jitter, width, height);
        } else if (jitter < 0) {
            r = {r.row - jitter, r.col - jitter, r.height + 2 * jitter,
                 r.width + 2 * jitter};
            if (r.height < 1 || r.width < 1) continue;  // shrunk away
        }
        fill_rect(det, r);
        if (split) {
            // Clear the short cross-section at the middle of the long axis.
            if (r.width >= r.height) {
                const int c = r.col + r.width / 2;
                for (int rr = r.row; rr < r.row + r.height; ++rr)
                    det.set(rr, c, 0);
            } else {
                const int rr = r.row + r.height / 2;
                for (int c = r.col; c < r.col + r.width; ++c)
                    det.set(rr, c, 0);
            }
        }
    }

    auto place_clutter = [&](int h, int w) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            Rect blob{rng.next_int(0, height - h), rng.next_int(0, width - w),
                      h, w};
            bool clear = true;
            for (const Rect& gt : gt_rects)
                if (intersects(blob, gt)) {
                    clear = false;
                    break;
                }
            if (clear) {
                fill_rect(det, blob);
                return;
            }
        }
        // No clutter-free spot found; blob is dropped.
    };

    for (int i = 0; i < cp.n_small_clutter; ++i) {
        const int area = rng.next_int(1, 4);
        const bool horizontal = rng.next() & 1;
        place_clutter(horizontal ? 1 : area, horizontal ? area : 1);
    }
    for (int i = 0; i < cp.n_large_clutter; ++i) {
        // 14..20 on each side, area >= 196 > both datasets' t_high.
        const int h = rng.next_int(14, 20);
        const int w = rng.next_int(14, 20);
        place_clutter(h, w);
    }
    return det;
}

Scene generate_scene(const SceneParams& params) {
    if (params.n_vehicles < 0 || params.vehicle_area_min < 1 ||
        params.vehicle_area_min > params.vehicle_area_max)
        throw ParameterError("generate_scene: bad vehicle parameters");

    SplitMix64 rng(params.seed);
    std::vector<Rect> rects;
    constexpr int kAttemptCap = 10000;
    for (int i = 0; i < params.n_vehicles; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kAttemptCap && !placed; ++attempt) {
            int h, w;
            if (!draw_vehicle_dims(rng, params, h, w)) continue;
            Rect cand{rng.next_int(0, params.height - h),
                      rng.next_int(0, params.width - w), h, w};
            bool ok = true;
            for (const Rect& r : rects)
                if (!separated(cand, r, params.min_separation)) {
                    ok = false;
                    break;
                }
            if (ok) {
                rects.push_back(cand);
                placed = true;
            }
        }
        if (!placed)
            throw ParameterError(
                "generate_scene: could not pack vehicles; reduce n_vehicles "
                "or enlarge the image");
    }

    Scene scene;
    scene.gt_rects = std::move(rects);
    scene.gt_mask = BinaryMask(params.width, params.height);
    for (const Rect& r : scene.gt_rects) fill_rect(scene.gt_mask, r);
    scene.det_mask = corrupt_detections(scene.gt_rects, params.corruption, rng,
                                        params.width, params.height);
    return scene;
}

}  // namespace wami
