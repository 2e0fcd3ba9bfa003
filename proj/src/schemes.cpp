#include "wami/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wami {

namespace {

// Selection filters keep components verbatim, so survivors are unions
// of unmodified input components.
template <typename Pred>
BinaryMask filter_components(const BinaryMask& mask, Pred keep) {
    LabelResult labeled = label_components(mask, 8);
    std::vector<Component> kept;
    for (Component& comp : labeled.components)
        if (keep(comp)) kept.push_back(std::move(comp));
    return render_components(kept, mask.width(), mask.height());
}

}  // namespace

BinaryMask sieve_area(const BinaryMask& mask, int t_low, int t_high) {
    if (t_low > t_high) throw ParameterError("sieve_area: t_low > t_high");
    return filter_components(mask, [&](const Component& c) {
        return c.area >= t_low && c.area <= t_high;
    });
}

double shape_index(const Component& component) {
    return component.perimeter / (4.0 * std::sqrt(component.area));
}

BinaryMask apply_proposed(const BinaryMask& mask, const Proposed& spec) {
    if (spec.t_low < 0 || spec.t_low > spec.t_high)
        throw ParameterError("proposed scheme: need 0 <= t_low <= t_high");
    return close(sieve_area(mask, spec.t_low, spec.t_high), spec.se);
}

BinaryMask apply_filtered_dilation(const BinaryMask& mask,
                                   const FilteredDilation& spec) {
    return dilate(median_filter(mask, spec.median_window), spec.dilation_se);
}

BinaryMask apply_heuristic_filtering(const BinaryMask& mask,
                                     const HeuristicFiltering& spec,
                                     const GroundTruthContext& ctx) {
    if (spec.area_fraction <= 0.0 || spec.area_fraction >= 1.0)
        throw ParameterError("heuristic filtering: area_fraction must be in (0,1)");
    if (spec.aspect_min < 0.0 || spec.aspect_min > 1.0)
        throw ParameterError("heuristic filtering: aspect_min must be in [0,1]");
    if (ctx.gt_components.empty())
        throw ContextError("heuristic filtering requires ground-truth components");
    int max_gt_area = 0;
    for (const Component& gt : ctx.gt_components)
        max_gt_area = std::max(max_gt_area, gt.area);
    const double area_cutoff = spec.area_fraction * max_gt_area;
    return filter_components(mask, [&](const Component& c) {
        return c.area >= area_cutoff && c.aspect_ratio() >= spec.aspect_min;
    });
}

BinaryMask apply_shape_index_filtering(const BinaryMask& mask,
                                       const ShapeIndexFiltering& spec,
                                       const GroundTruthContext* ctx) {
    double si_min;
    if (spec.si_min) {
        si_min = *spec.si_min;
        if (si_min < 0.0)
            throw ParameterError("shape-index filtering: si_min must be >= 0");
    } else {
        if (!ctx || ctx->gt_components.empty())
            throw ContextError(
                "shape-index filtering requires ground truth or explicit si_min");
        si_min = std::numeric_limits<double>::infinity();
        for (const Component& gt : ctx->gt_components)
            si_min = std::min(si_min, shape_index(gt));
    }
    return filter_components(
        mask, [&](const Component& c) { return shape_index(c) >= si_min; });
}

BinaryMask apply_sieve_and_open(const BinaryMask& mask, const SieveAndOpen& spec) {
    BinaryMask sieved = filter_components(
        mask, [&](const Component& c) { return c.area <= spec.area_max; });
    return open(sieved, spec.open_se);
}

BinaryMask apply_scheme(const BinaryMask& mask, const SchemeSpec& spec,
                        const GroundTruthContext* ctx) {
    return std::visit(
        [&](const auto& s) -> BinaryMask {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NoOp>) {
                return mask;
            } else if constexpr (std::is_same_v<T, Proposed>) {
                return apply_proposed(mask, s);
            } else if constexpr (std::is_same_v<T, FilteredDilation>) {
                return apply_filtered_dilation(mask, s);
            } else if constexpr (std::is_same_v<T, HeuristicFiltering>) {
                if (!ctx)
                    throw ContextError("heuristic filtering requires ground truth");
                return apply_heuristic_filtering(mask, s, *ctx);
            } else if constexpr (std::is_same_v<T, ShapeIndexFiltering>) {
                return apply_shape_index_filtering(mask, s, ctx);
            } else {
                return apply_sieve_and_open(mask, s);
            }
        },
        spec);
}

}  // namespace wami
