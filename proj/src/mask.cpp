#include "wami/mask.hpp"

#include <algorithm>
#include <numeric>

namespace wami {

namespace {

// Union-find with path halving.
int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    int ra = uf_find(parent, a), rb = uf_find(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
}

}  // namespace

LabelResult label_components(const BinaryMask& mask, int connectivity) {
    if (connectivity != 4 && connectivity != 8)
        throw ParameterError("connectivity must be 4 or 8");

    const int w = mask.width(), h = mask.height();
    LabelMap map;
    map.width = w;
    map.height = h;
    map.labels.assign(static_cast<size_t>(w) * h, 0);

    // First pass: provisional labels, merging through already-visited
    // neighbors (west, and the row above).
    std::vector<int> parent;
    parent.push_back(0);  // background sentinel
    auto provisional = std::vector<int>(static_cast<size_t>(w) * h, 0);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (!mask.at(r, c)) continue;
            const size_t idx = static_cast<size_t>(r) * w + c;
            int neighbors[4];
            int nn = 0;
            if (c > 0 && mask.at(r, c - 1))
                neighbors[nn++] = provisional[idx - 1];
            if (r > 0 && mask.at(r - 1, c))
                neighbors[nn++] = provisional[idx - w];
            if (connectivity == 8) {
                if (r > 0 && c > 0 && mask.at(r - 1, c - 1))
                    neighbors[nn++] = provisional[idx - w - 1];
                if (r > 0 && c + 1 < w && mask.at(r - 1, c + 1))
                    neighbors[nn++] = provisional[idx - w + 1];
            }
            if (nn == 0) {
                int fresh = static_cast<int>(parent.size());
                parent.push_back(fresh);
                provisional[idx] = fresh;
            } else {
                int lab = neighbors[0];
                for (int i = 1; i < nn; ++i) lab = std::min(lab, neighbors[i]);
                provisional[idx] = lab;
                for (int i = 0; i < nn; ++i) uf_union(parent, lab, neighbors[i]);
            }
        }
    }

    // Second pass: resolve roots and renumber in raster order of first pixel.
    std::vector<int> final_label(parent.size(), 0);
    int next = 0;
    LabelResult result;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const size_t idx = static_cast<size_t>(r) * w + c;
            if (!provisional[idx]) continue;
            int root = uf_find(parent, provisional[idx]);
            if (!final_label[root]) {
                final_label[root] = ++next;
                Component comp;
                comp.label = next;
                comp.bbox = {r, c, r, c};
                result.components.push_back(std::move(comp));
            }
            const int lab = final_label[root];
            map.labels[idx] = lab;
            Component& comp = result.components[lab - 1];
            comp.pixels.emplace_back(r, c);
            comp.bbox.min_row = std::min(comp.bbox.min_row, r);
            comp.bbox.min_col = std::min(comp.bbox.min_col, c);
            comp.bbox.max_row = std::max(comp.bbox.max_row, r);
            comp.bbox.max_col = std::max(comp.bbox.max_col, c);
        }
    }
    map.component_count = next;

    for (Component& comp : result.components) {
        comp.area = static_cast<int>(comp.pixels.size());
        for (auto [r, c] : comp.pixels) {
            const bool boundary = !mask.at_or_zero(r - 1, c) ||
                                  !mask.at_or_zero(r + 1, c) ||
                                  !mask.at_or_zero(r, c - 1) ||
                                  !mask.at_or_zero(r, c + 1);
            if (boundary) ++comp.perimeter;
        }
    }

    result.map = std::move(map);
    return result;
}

BinaryMask render_components(const std::vector<Component>& components,
                             int width, int height) {
    BinaryMask out(width, height);
    for (const Component& comp : components) {
        for (auto [r, c] : comp.pixels) {
            if (!out.in_bounds(r, c))
                throw ParameterError("component pixel outside target image");
            out.set(r, c, 1);
        }
    }
    return out;
}

void fill_rect(BinaryMask& mask, const Rect& r) {
    for (int rr = r.row; rr < r.row + r.height; ++rr)
        for (int cc = r.col; cc < r.col + r.width; ++cc)
            mask.set(rr, cc, 1);
}

Component component_from_rect(const Rect& r, int label) {
    if (r.height < 1 || r.width < 1)
        throw ParameterError("rect sides must be >= 1");
    Component comp;
    comp.label = label;
    comp.area = r.height * r.width;
    comp.bbox = {r.row, r.col, r.row + r.height - 1, r.col + r.width - 1};
    comp.pixels.reserve(comp.area);
    for (int rr = r.row; rr <= comp.bbox.max_row; ++rr)
        for (int cc = r.col; cc <= comp.bbox.max_col; ++cc) {
            comp.pixels.emplace_back(rr, cc);
            const bool boundary = rr == r.row || rr == comp.bbox.max_row ||
                                  cc == r.col || cc == comp.bbox.max_col;
            if (boundary) ++comp.perimeter;
        }
    return comp;
}

}  // namespace wami
