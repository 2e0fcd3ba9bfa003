#include "wami/morphology.hpp"

namespace wami {

StructuringElement::StructuringElement(Shape shape, int radius)
    : shape_(shape), radius_(radius) {
    if (radius < 0) throw ParameterError("structuring element radius must be >= 0");
    const long long r2 = static_cast<long long>(radius) * radius;
    for (int dr = -radius; dr <= radius; ++dr)
        for (int dc = -radius; dc <= radius; ++dc) {
            if (shape == Shape::Disk &&
                static_cast<long long>(dr) * dr + static_cast<long long>(dc) * dc > r2)
                continue;
            offsets_.emplace_back(dr, dc);
        }
}

StructuringElement StructuringElement::square(int radius) {
    return StructuringElement(Shape::Square, radius);
}

StructuringElement StructuringElement::disk(int radius) {
    return StructuringElement(Shape::Disk, radius);
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
    BinaryMask out(mask.width(), mask.height());
    // Scatter from foreground pixels; SE symmetry makes scatter == gather.
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c) {
            if (!mask.at(r, c)) continue;
            for (auto [dr, dc] : se.offsets())
                if (out.in_bounds(r + dr, c + dc)) out.set(r + dr, c + dc, 1);
        }
    return out;
}

BinaryMask erode(const BinaryMask& mask, const StructuringElement& se) {
    BinaryMask out(mask.width(), mask.height());
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c) {
            bool keep = true;
            for (auto [dr, dc] : se.offsets()) {
                const int rr = r + dr, cc = c + dc;
                if (mask.in_bounds(rr, cc) && !mask.at(rr, cc)) {
                    keep = false;
                    break;
                }
            }
            if (keep) out.set(r, c, 1);
        }
    return out;
}

BinaryMask open(const BinaryMask& mask, const StructuringElement& se) {
    return dilate(erode(mask, se), se);
}

BinaryMask close(const BinaryMask& mask, const StructuringElement& se) {
    return erode(dilate(mask, se), se);
}

BinaryMask median_filter(const BinaryMask& mask, int window) {
    if (window < 1 || window % 2 == 0)
        throw ParameterError("median filter window must be odd and >= 1");
    const int r = window / 2;
    const int majority = window * window / 2 + 1;
    BinaryMask out(mask.width(), mask.height());
    for (int row = 0; row < mask.height(); ++row)
        for (int col = 0; col < mask.width(); ++col) {
            int ones = 0;
            for (int dr = -r; dr <= r; ++dr)
                for (int dc = -r; dc <= r; ++dc)
                    ones += mask.at_or_zero(row + dr, col + dc);
            if (ones >= majority) out.set(row, col, 1);
        }
    return out;
}

}  // namespace wami
