#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wami/errors.hpp"

namespace wami {

/// Rectangular binary image, row-major, origin at top-left.
/// Pixel values are 0 (background) or 1 (foreground).
class BinaryMask {
public:
    BinaryMask() = default;
    BinaryMask(int width, int height, uint8_t fill = 0)
        : width_(width), height_(height),
          pixels_(static_cast<size_t>(width) * height, fill) {
        if (width < 1 || height < 1)
            throw ParameterError("mask dimensions must be >= 1");
        if (fill > 1) throw ParameterError("mask fill must be 0 or 1");
    }

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height_ && col >= 0 && col < width_;
    }

    uint8_t at(int row, int col) const {
        return pixels_[static_cast<size_t>(row) * width_ + col];
    }
    void set(int row, int col, uint8_t v) {
        pixels_[static_cast<size_t>(row) * width_ + col] = v;
    }

    // 0 when out of image; used by neighborhood scans.
    uint8_t at_or_zero(int row, int col) const {
        return in_bounds(row, col) ? at(row, col) : 0;
    }

    size_t foreground_count() const {
        size_t n = 0;
        for (uint8_t p : pixels_) n += p;
        return n;
    }

    const std::vector<uint8_t>& pixels() const { return pixels_; }
    std::vector<uint8_t>& pixels() { return pixels_; }

    friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<uint8_t> pixels_;
};

/// Axis-aligned rectangle in pixel coordinates (top-left origin).
struct Rect {
    int row = 0;
    int col = 0;
    int height = 0;
    int width = 0;

    friend bool operator==(const Rect&, const Rect&) = default;
};

struct BBox {
    int min_row = 0;
    int min_col = 0;
    int max_row = 0;
    int max_col = 0;

    int height() const { return max_row - min_row + 1; }
    int width() const { return max_col - min_col + 1; }

    friend bool operator==(const BBox&, const BBox&) = default;
};

using Pixel = std::pair<int, int>;  // (row, col)

/// One 8-connected (or 4-connected) foreground region.
/// Pixels are stored explicitly, in raster order, so the evaluator can
/// compute exact pixel overlaps.
struct Component {
    int label = 0;
    int area = 0;
    BBox bbox;
    // Foreground pixels with at least one 4-neighbor that is background
    // or outside the image.
    int perimeter = 0;
    std::vector<Pixel> pixels;

    // min/max of bbox side lengths, orientation-free, in (0, 1].
    double aspect_ratio() const {
        int h = bbox.height(), w = bbox.width();
        return static_cast<double>(h < w ? h : w) / (h < w ? w : h);
    }
};

/// Labels of the connected components of a mask; 0 is background,
/// foreground labels are exactly 1..component_count.
struct LabelMap {
    int width = 0;
    int height = 0;
    std::vector<int> labels;  // row-major
    int component_count = 0;

    int at(int row, int col) const {
        return labels[static_cast<size_t>(row) * width + col];
    }
};

struct LabelResult {
    LabelMap map;
    std::vector<Component> components;  // sorted by label, label i at index i-1
};

/// Two-pass union-find labeling. Labels are assigned in raster-scan order
/// of each component's first-encountered pixel, so output is deterministic.
LabelResult label_components(const BinaryMask& mask, int connectivity = 8);

/// Paint the listed components onto a fresh width x height mask.
/// Throws ParameterError if any pixel falls outside the target image.
BinaryMask render_components(const std::vector<Component>& components,
                             int width, int height);

/// Stamp a solid rectangle (clipped against nothing; must be in bounds).
void fill_rect(BinaryMask& mask, const Rect& r);

/// Build a Component directly from an in-bounds rectangle. Used for
/// rectangular ground truth, bypassing mask labeling.
Component component_from_rect(const Rect& r, int label);

}  // namespace wami
