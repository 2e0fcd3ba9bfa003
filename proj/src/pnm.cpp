#include "wami/pnm.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <vector>

#include "wami/schemes.hpp"

namespace wami {

namespace {

// netpbm header tokens: whitespace-separated, '#' starts a comment to
// end of line. Tracks the byte offset for error reporting.
class PnmReader {
public:
    PnmReader(std::istream& in, const std::string& path) : in_(in), path_(path) {}

    std::string next_token() {
        std::string tok;
        int ch;
        while ((ch = get()) != EOF) {
            if (ch == '#') {
                while ((ch = get()) != EOF && ch != '\n') {
                }
                continue;
            }
            if (!std::isspace(ch)) break;
        }
        if (ch == EOF) fail("unexpected end of file in header");
        while (ch != EOF && !std::isspace(ch) && ch != '#') {
            tok.push_back(static_cast<char>(ch));
            ch = get();
        }
        if (ch == '#') in_.unget(), --offset_;
        return tok;
    }

    int parse_dim(const std::string& tok) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            fail("non-numeric dimension '" + tok + "'");
        }
        if (pos != tok.size() || v < 1 || v > 1 << 20)
            fail("bad dimension '" + tok + "'");
        return static_cast<int>(v);
    }

    int get() {
        const int ch = in_.get();
        if (ch != EOF) ++offset_;
        return ch;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError(path_ + ": " + what + " (byte offset " +
                          std::to_string(offset_) + ")");
    }

    long offset() const { return offset_; }

private:
    std::istream& in_;
    std::string path_;
    long offset_ = 0;
};

}  // namespace

BinaryMask read_mask(const std::string& path, bool invert) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    PnmReader reader(in, path);

    const std::string magic = reader.next_token();
    if (magic != "P1" && magic != "P4")
        reader.fail("expected P1 or P4 bitmap, got '" + magic + "'");
    const int width = reader.parse_dim(reader.next_token());
    const int height = reader.parse_dim(reader.next_token());

    BinaryMask mask(width, height);
    if (magic == "P1") {
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c) {
                int ch;
                do {
                    ch = reader.get();
                    if (ch == '#')
                        while ((ch = reader.get()) != EOF && ch != '\n') {
                        }
                } while (ch != EOF && std::isspace(ch));
                if (ch != '0' && ch != '1') reader.fail("expected '0' or '1'");
                mask.set(r, c, static_cast<uint8_t>(ch - '0'));
            }
    } else {
        // Exactly one whitespace byte separates the header from the payload;
        // next_token already consumed it.
        const int row_bytes = (width + 7) / 8;
        std::vector<char> row(row_bytes);
        for (int r = 0; r < height; ++r) {
            in.read(row.data(), row_bytes);
            if (in.gcount() != row_bytes) reader.fail("truncated P4 payload");
            for (int c = 0; c < width; ++c) {
                const uint8_t byte = static_cast<uint8_t>(row[c / 8]);
                mask.set(r, c, (byte >> (7 - c % 8)) & 1);
            }
        }
    }
    if (invert)
        for (uint8_t& p : mask.pixels()) p ^= 1;
    return mask;
}

void write_mask(const BinaryMask& mask, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "P4\n" << mask.width() << " " << mask.height() << "\n";
    const int row_bytes = (mask.width() + 7) / 8;
    std::vector<char> row(row_bytes);
    for (int r = 0; r < mask.height(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        for (int c = 0; c < mask.width(); ++c)
            if (mask.at(r, c)) row[c / 8] |= static_cast<char>(0x80 >> (c % 8));
        out.write(row.data(), row_bytes);
    }
    if (!out) throw IoError("write failed for " + path);
}

void render_overlay(const BinaryMask& det,
                    const std::vector<Component>& gt_components,
                    const MatchResult& match, const std::string& path) {
    const int w = det.width(), h = det.height();
    std::vector<uint8_t> rgb(static_cast<size_t>(w) * h * 3, 0);
    auto paint = [&](int r, int c, uint8_t red, uint8_t green, uint8_t blue) {
        const size_t i = (static_cast<size_t>(r) * w + c) * 3;
        rgb[i] = red;
        rgb[i + 1] = green;
        rgb[i + 2] = blue;
    };

    std::set<int> fn_labels, tp_det, unmatched_det;
    for (const MatchPair& p : match.pairs) tp_det.insert(p.detection_label);
    for (int lab : match.unmatched_overlapping) unmatched_det.insert(lab);
    std::set<int> touched_gt;
    for (const MatchPair& p : match.pairs) touched_gt.insert(p.gt_label);

    // Blue FN layer first; detection colors paint over any overlap.
    const LabelResult det_labeled = label_components(det, 8);
    std::set<int> overlapping_gt;
    for (const Component& g : gt_components) {
        bool touches = false;
        for (auto [r, c] : g.pixels) {
            if (!det.in_bounds(r, c))
                throw ParameterError("overlay: GT component outside detection image");
            if (det.at(r, c)) touches = true;
        }
        if (!touches)
            for (auto [r, c] : g.pixels) paint(r, c, 0, 0, 255);
    }
    for (const Component& d : det_labeled.components) {
        uint8_t red = 255, green = 0;  // FP: red
        if (tp_det.count(d.label)) red = 0, green = 255;             // TP: green
        else if (unmatched_det.count(d.label)) red = 255, green = 255;  // yellow
        for (auto [r, c] : d.pixels) paint(r, c, red, green, 0);
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "P6\n" << w << " " << h << "\n255\n";
    out.write(reinterpret_cast<const char*>(rgb.data()),
              static_cast<std::streamsize>(rgb.size()));
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace wami
