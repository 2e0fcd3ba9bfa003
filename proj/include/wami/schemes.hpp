#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "wami/mask.hpp"
#include "wami/morphology.hpp"

namespace wami {

// The five post-processing schemes, each a mask-to-mask transform,
// plus a no-op baseline.

struct NoOp {};

/// Area sieve to [t_low, t_high] followed by morphological closing.
struct Proposed {
    int t_low = 5;
    int t_high = 160;  // Tucson default; Phoenix uses 180
    StructuringElement se = StructuringElement::square(1);
};

/// Binary median smoothing followed by dilation.
struct FilteredDilation {
    int median_window = 3;
    StructuringElement dilation_se = StructuringElement::square(1);
};

/// Drop components smaller than a fraction of the largest ground-truth
/// object, and components with bbox aspect ratio below a floor.
struct HeuristicFiltering {
    double area_fraction = 0.05;
    double aspect_min = 0.2;
};

/// Drop components whose shape index falls below a floor; the floor
/// defaults to the lowest shape index among ground-truth objects.
struct ShapeIndexFiltering {
    std::optional<double> si_min;  // explicit floor decouples from GT
};

/// Drop components larger than area_max, then morphological opening.
struct SieveAndOpen {
    int area_max = 2000;
    StructuringElement open_se = StructuringElement::disk(5);
};

using SchemeSpec = std::variant<NoOp, Proposed, FilteredDilation,
                                HeuristicFiltering, ShapeIndexFiltering,
                                SieveAndOpen>;

/// Ground-truth components backing the schemes that need GT statistics.
struct GroundTruthContext {
    std::vector<Component> gt_components;
};

/// Keep exactly the 8-connected components with area in [t_low, t_high],
/// pixels unmodified.
BinaryMask sieve_area(const BinaryMask& mask, int t_low, int t_high);

/// perimeter / (4 * sqrt(area)); low for compact blobs, high for
/// elongated or ragged regions.
double shape_index(const Component& component);

BinaryMask apply_proposed(const BinaryMask& mask, const Proposed& spec);
BinaryMask apply_filtered_dilation(const BinaryMask& mask,
                                   const FilteredDilation& spec);
BinaryMask apply_heuristic_filtering(const BinaryMask& mask,
                                     const HeuristicFiltering& spec,
                                     const GroundTruthContext& ctx);
BinaryMask apply_shape_index_filtering(const BinaryMask& mask,
                                       const ShapeIndexFiltering& spec,
                                       const GroundTruthContext* ctx);
BinaryMask apply_sieve_and_open(const BinaryMask& mask, const SieveAndOpen& spec);

/// Dispatch to the scheme named by the variant. ctx may be null for
/// schemes that do not consult ground truth.
BinaryMask apply_scheme(const BinaryMask& mask, const SchemeSpec& spec,
                        const GroundTruthContext* ctx = nullptr);

}  // namespace wami
