#pragma once

#include <vector>

#include "wami/mask.hpp"

namespace wami {

/// Square or disk probe with centered origin. square(r) contains all
/// offsets with Chebyshev norm <= r; disk(r) all with Euclidean norm <= r.
/// Both are centrally symmetric and contain (0,0).
class StructuringElement {
public:
    enum class Shape { Square, Disk };

    static StructuringElement square(int radius);
    static StructuringElement disk(int radius);

    Shape shape() const { return shape_; }
    int radius() const { return radius_; }
    const std::vector<Pixel>& offsets() const { return offsets_; }

private:
    StructuringElement(Shape shape, int radius);

    Shape shape_;
    int radius_;
    std::vector<Pixel> offsets_;  // (drow, dcol)
};

/// output(p) = 1 iff some translated SE offset lands on foreground;
/// out-of-image is treated as background.
BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se);

/// output(p) = 1 iff every in-image probe pixel is foreground;
/// out-of-image is treated as foreground (dual padding to dilate).
BinaryMask erode(const BinaryMask& mask, const StructuringElement& se);

BinaryMask open(const BinaryMask& mask, const StructuringElement& se);
BinaryMask close(const BinaryMask& mask, const StructuringElement& se);

/// Majority vote over the window x window neighborhood, out-of-image
/// neighbors counted as background. Window must be odd.
BinaryMask median_filter(const BinaryMask& mask, int window);

}  // namespace wami
