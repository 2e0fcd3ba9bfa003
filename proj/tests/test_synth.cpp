#include <doctest.h>

#include "wami/schemes.hpp"
#include "wami/synth.hpp"

using namespace wami;

TEST_CASE("splitmix64 reference values") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);

    SplitMix64 a(12345), b(12345);
    for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("splitmix64 top-bit balance") {
    SplitMix64 rng(1);
    long ones = 0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) ones += rng.next() >> 63;
    const double mean = static_cast<double>(ones) / n;
    CHECK(mean > 0.49);
    CHECK(mean < 0.51);
}

TEST_CASE("zero corruption reproduces the ground truth") {
    SceneParams params;
    params.corruption = CorruptionParams{0.0, 0.0, 0, 0, 0};
    params.seed = 7;
    const Scene scene = generate_scene(params);
    CHECK(scene.det_mask == scene.gt_mask);
}

TEST_CASE("p_miss = 1 empties the detection") {
    SceneParams params;
    params.corruption = CorruptionParams{1.0, 0.0, 0, 0, 0};
    params.seed = 3;
    const Scene scene = generate_scene(params);
    CHECK(scene.det_mask.foreground_count() == 0);
    CHECK(scene.gt_rects.size() == 40);
}

TEST_CASE("scene invariants hold across seeds") {
    for (uint64_t seed : {1ULL, 13ULL, 42ULL, 99ULL, 1234ULL}) {
        SceneParams params;
        params.seed = seed;
        const Scene scene = generate_scene(params);
        REQUIRE(scene.gt_rects.size() == 40);
        BinaryMask rebuilt(params.width, params.height);
        for (size_t i = 0; i < scene.gt_rects.size(); ++i) {
            const Rect& r = scene.gt_rects[i];
            const int area = r.height * r.width;
            CHECK(area >= params.vehicle_area_min);
            CHECK(area <= params.vehicle_area_max);
            const double aspect =
                static_cast<double>(std::min(r.height, r.width)) /
                std::max(r.height, r.width);
            CHECK(aspect >= params.aspect_min);
            CHECK(aspect <= params.aspect_max);
            CHECK(r.row >= 0);
            CHECK(r.col >= 0);
            CHECK(r.row + r.height <= params.height);
            CHECK(r.col + r.width <= params.width);
            fill_rect(rebuilt, r);
            for (size_t j = i + 1; j < scene.gt_rects.size(); ++j) {
                const Rect& o = scene.gt_rects[j];
                const bool gap_ok =
                    r.row + r.height + params.min_separation <= o.row ||
                    o.row + o.height + params.min_separation <= r.row ||
                    r.col + r.width + params.min_separation <= o.col ||
                    o.col + o.width + params.min_separation <= r.col;
                CHECK(gap_ok);
            }
        }
        CHECK(rebuilt == scene.gt_mask);
    }
}

TEST_CASE("identical params and seed give bit-identical scenes") {
    SceneParams params;
    params.seed = 42;
    const Scene a = generate_scene(params);
    const Scene b = generate_scene(params);
    CHECK(a.gt_mask == b.gt_mask);
    CHECK(a.det_mask == b.det_mask);
    CHECK(a.gt_rects == b.gt_rects);
}

TEST_CASE("small clutter components have area <= 4") {
    SceneParams params;
    params.corruption = CorruptionParams{0.0, 0.0, 0, 100, 0};
    params.seed = 17;
    const Scene scene = generate_scene(params);
    const size_t gt_comps = label_components(scene.gt_mask).components.size();
    const auto det_comps = label_components(scene.det_mask).components;
    CHECK(det_comps.size() <= gt_comps + 100);

    // Clutter pixels are exactly det minus gt; each stamped blob is <= 4
    // pixels, so clutter components exceed 4 only where blobs merged.
    BinaryMask diff = scene.det_mask;
    for (size_t i = 0; i < diff.pixels().size(); ++i)
        if (scene.gt_mask.pixels()[i]) diff.pixels()[i] = 0;
    const auto clutter = label_components(diff).components;
    CHECK(clutter.size() <= 100);
    size_t clutter_area = 0;
    for (const Component& c : clutter) {
        CHECK(c.area <= 16);
        clutter_area += c.area;
    }
    CHECK(clutter_area <= 400);
    CHECK(scene.det_mask.foreground_count() ==
          scene.gt_mask.foreground_count() + clutter_area);
}

TEST_CASE("large clutter exceeds both datasets' upper sieve bound") {
    SceneParams params;
    params.corruption = CorruptionParams{1.0, 0.0, 0, 0, 10};
    params.seed = 17;
    const Scene scene = generate_scene(params);
    const auto comps = label_components(scene.det_mask).components;
    CHECK(!comps.empty());
    for (const Component& c : comps) CHECK(c.area > 180);
}

TEST_CASE("split clears one cross-section of the long axis") {
    std::vector<Rect> rects{{2, 2, 5, 12}};
    CorruptionParams cp{0.0, 1.0, 0, 0, 0};
    SplitMix64 rng(5);
    const BinaryMask det = corrupt_detections(rects, cp, rng, 30, 12);
    CHECK(det.foreground_count() == 5 * 12 - 5);
    CHECK(label_components(det).components.size() == 2);
}

TEST_CASE("default corruption is sievable clutter") {
    // Clutter that did not merge with vehicles is entirely outside [5, 160].
    SceneParams params;
    params.seed = 8;
    const Scene scene = generate_scene(params);
    const BinaryMask sieved = sieve_area(scene.det_mask, 5, 160);
    for (const Component& c : label_components(sieved).components) {
        CHECK(c.area >= 5);
        CHECK(c.area <= 160);
    }
}
