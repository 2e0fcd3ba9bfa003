// Brute-force reference implementations used only by tests. Each oracle
// follows its definition literally and stays independent of the library
// code paths it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "wami/mask.hpp"
#include "wami/morphology.hpp"

namespace oracles {

inline wami::BinaryMask random_mask(std::mt19937_64& rng, int width, int height,
                                    double density = 0.3) {
    wami::BinaryMask mask(width, height);
    std::bernoulli_distribution coin(density);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (coin(rng)) mask.set(r, c, 1);
    return mask;
}

// Recursive flood fill (explicit stack); labels numbered by raster order
// of seed pixels, 0 = background.
inline std::vector<int> flood_fill_labels(const wami::BinaryMask& mask,
                                          int connectivity) {
    const int w = mask.width(), h = mask.height();
    std::vector<int> labels(static_cast<size_t>(w) * h, 0);
    int next = 0;
    std::vector<std::pair<int, int>> stack;
    for (int r0 = 0; r0 < h; ++r0)
        for (int c0 = 0; c0 < w; ++c0) {
            if (!mask.at(r0, c0) || labels[static_cast<size_t>(r0) * w + c0])
                continue;
            ++next;
            stack.push_back({r0, c0});
            labels[static_cast<size_t>(r0) * w + c0] = next;
            while (!stack.empty()) {
                auto [r, c] = stack.back();
                stack.pop_back();
                for (int dr = -1; dr <= 1; ++dr)
                    for (int dc = -1; dc <= 1; ++dc) {
                        if (dr == 0 && dc == 0) continue;
                        if (connectivity == 4 && dr != 0 && dc != 0) continue;
                        const int rr = r + dr, cc = c + dc;
                        if (!mask.in_bounds(rr, cc) || !mask.at(rr, cc))
                            continue;
                        auto& lab = labels[static_cast<size_t>(rr) * w + cc];
                        if (!lab) {
                            lab = next;
                            stack.push_back({rr, cc});
                        }
                    }
            }
        }
    return labels;
}

// Definitional dilation: union of all translated SE probes.
inline wami::BinaryMask brute_dilate(const wami::BinaryMask& mask,
                                     const wami::StructuringElement& se) {
    wami::BinaryMask out(mask.width(), mask.height());
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c) {
            bool hit = false;
            for (auto [dr, dc] : se.offsets()) {
                const int rr = r - dr, cc = c - dc;
                if (mask.in_bounds(rr, cc) && mask.at(rr, cc)) hit = true;
            }
            if (hit) out.set(r, c, 1);
        }
    return out;
}

// Definitional erosion with foreground padding outside the image.
inline wami::BinaryMask brute_erode(const wami::BinaryMask& mask,
                                    const wami::StructuringElement& se) {
    wami::BinaryMask out(mask.width(), mask.height());
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c) {
            bool all = true;
            for (auto [dr, dc] : se.offsets()) {
                const int rr = r + dr, cc = c + dc;
                if (mask.in_bounds(rr, cc) && !mask.at(rr, cc)) all = false;
            }
            if (all) out.set(r, c, 1);
        }
    return out;
}

// Majority by explicit count over the window, background padding.
inline wami::BinaryMask brute_median(const wami::BinaryMask& mask, int window) {
    const int rad = window / 2;
    wami::BinaryMask out(mask.width(), mask.height());
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c) {
            std::vector<int> values;
            for (int dr = -rad; dr <= rad; ++dr)
                for (int dc = -rad; dc <= rad; ++dc)
                    values.push_back(mask.at_or_zero(r + dr, c + dc));
            std::sort(values.begin(), values.end());
            out.set(r, c, static_cast<uint8_t>(values[values.size() / 2]));
        }
    return out;
}

inline bool subset_of(const wami::BinaryMask& a, const wami::BinaryMask& b) {
    for (size_t i = 0; i < a.pixels().size(); ++i)
        if (a.pixels()[i] && !b.pixels()[i]) return false;
    return true;
}

inline wami::BinaryMask complement(const wami::BinaryMask& mask) {
    wami::BinaryMask out = mask;
    for (uint8_t& p : out.pixels()) p ^= 1;
    return out;
}

// Exhaustive one-to-one matching over overlapping (det, gt) pairs:
// maximize pair count first, then total overlap.
struct MatchSearch {
    const std::vector<std::vector<int>>& overlap;  // [det][gt]
    int best_count = 0;
    long best_overlap = 0;

    void search(size_t det, std::vector<bool>& gt_used, int count, long total) {
        if (det == overlap.size()) {
            if (count > best_count ||
                (count == best_count && total > best_overlap)) {
                best_count = count;
                best_overlap = total;
            }
            return;
        }
        search(det + 1, gt_used, count, total);  // leave this det unmatched
        for (size_t g = 0; g < gt_used.size(); ++g)
            if (!gt_used[g] && overlap[det][g] > 0) {
                gt_used[g] = true;
                search(det + 1, gt_used, count + 1, total + overlap[det][g]);
                gt_used[g] = false;
            }
    }
};

inline int exhaustive_max_matching(const std::vector<std::vector<int>>& overlap,
                                   size_t gt_count) {
    MatchSearch search{overlap};
    std::vector<bool> gt_used(gt_count, false);
    search.search(0, gt_used, 0, 0);
    return search.best_count;
}

// Student-t 0.975 quantile by bisection on the CDF, with the CDF computed
// by adaptive Simpson quadrature of the density. Accurate to ~1e-10.
inline double t_density(double x, double nu) {
    const double log_c = std::lgamma((nu + 1) / 2) - std::lgamma(nu / 2) -
                         0.5 * std::log(nu * std::acos(-1.0));
    return std::exp(log_c - (nu + 1) / 2 * std::log1p(x * x / nu));
}

inline double simpson(double a, double b, double nu, double fa, double fm,
                      double fb, double whole, int depth) {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2, rm = (m + b) / 2;
    const double flm = t_density(lm, nu), frm = t_density(rm, nu);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 1e-14)
        return left + right;
    return simpson(a, m, nu, fa, flm, fm, left, depth - 1) +
           simpson(m, b, nu, fm, frm, fb, right, depth - 1);
}

inline double t_cdf_from_zero(double x, double nu) {
    const double fa = t_density(0, nu), fb = t_density(x, nu);
    const double fm = t_density(x / 2, nu);
    const double whole = x / 6 * (fa + 4 * fm + fb);
    return simpson(0, x, nu, fa, fm, fb, whole, 40);
}

inline double t_quantile_975(int df) {
    double lo = 0.0, hi = 1000.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        if (0.5 + t_cdf_from_zero(mid, df) < 0.975)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace oracles
