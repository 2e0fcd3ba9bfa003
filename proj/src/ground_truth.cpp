#include "wami/ground_truth.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wami/pnm.hpp"

namespace fs = std::filesystem;

namespace wami {

namespace {

int parse_int_field(const std::string& field, const std::string& path,
                    int line_no) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(field, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != field.size() || field.empty())
        throw FormatError(path + ":" + std::to_string(line_no) +
                          ": non-integer field '" + field + "'");
    return static_cast<int>(v);
}

}  // namespace

std::vector<GroundTruthRecord> read_ground_truth_records(const std::string& path,
                                                         int frame_width,
                                                         int frame_height) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw FormatError(path + ": empty file");
    ++line_no;
    if (line.ends_with('\r')) line.pop_back();
    if (line != "frame,row,col,height,width")
        throw FormatError(path + ":1: expected header "
                          "'frame,row,col,height,width'");

    std::vector<GroundTruthRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.ends_with('\r')) line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        int values[5];
        for (int i = 0; i < 5; ++i) {
            if (!std::getline(ss, field, ','))
                throw FormatError(path + ":" + std::to_string(line_no) +
                                  ": expected 5 fields");
            values[i] = parse_int_field(field, path, line_no);
        }
        if (std::getline(ss, field, ','))
            throw FormatError(path + ":" + std::to_string(line_no) +
                              ": expected 5 fields");
        GroundTruthRecord rec{values[0],
                              {values[1], values[2], values[3], values[4]}};
        const Rect& r = rec.rect;
        if (rec.frame < 0 || r.height < 1 || r.width < 1 || r.row < 0 ||
            r.col < 0 || r.row + r.height > frame_height ||
            r.col + r.width > frame_width)
            throw FormatError(path + ":" + std::to_string(line_no) +
                              ": rect out of bounds for " +
                              std::to_string(frame_width) + "x" +
                              std::to_string(frame_height));
        records.push_back(rec);
    }
    return records;
}

GroundTruthSet read_ground_truth_csv(const std::string& path, int frame_width,
                                     int frame_height) {
    GroundTruthSet set;
    for (const GroundTruthRecord& rec :
         read_ground_truth_records(path, frame_width, frame_height)) {
        auto& comps = set[rec.frame];
        comps.push_back(
            component_from_rect(rec.rect, static_cast<int>(comps.size()) + 1));
    }
    return set;
}

GroundTruthSet read_ground_truth_dir(const std::string& path) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    GroundTruthSet set;
    for (const fs::path& file : files) {
        const std::string stem = file.stem().string();
        const size_t digit = stem.find_first_of("0123456789");
        if (digit == std::string::npos)
            throw FormatError(file.string() + ": no frame index in file name");
        const int frame = std::stoi(stem.substr(digit));
        set[frame] = label_components(read_mask(file.string()), 8).components;
    }
    return set;
}

GroundTruthSet read_ground_truth(const std::string& path, int frame_width,
                                 int frame_height) {
    if (fs::is_directory(path)) return read_ground_truth_dir(path);
    return read_ground_truth_csv(path, frame_width, frame_height);
}

void write_ground_truth_csv(const std::vector<GroundTruthRecord>& records,
                            const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "frame,row,col,height,width\n";
    for (const GroundTruthRecord& rec : records)
        out << rec.frame << "," << rec.rect.row << "," << rec.rect.col << ","
            << rec.rect.height << "," << rec.rect.width << "\n";
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace wami
