#include "pvoros/io.hpp"

#include "pvoros/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pvoros {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot open for writing: " + tmp.string());
        out << content;
        if (!out.good()) throw DataError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

double parse_double(const std::string& s, const std::filesystem::path& path, std::size_t line_no,
                    const char* what) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw DataError(path.string() + ":" + std::to_string(line_no) + ": cannot parse " + what +
                        " from '" + s + "'");
    }
    return v;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lines.empty() && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        lines.push_back(line);
    }
    return lines;
}

} // namespace

ScoreSet read_scores_csv(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || (lines.size() == 1 && trim(lines[0]).empty())) {
        throw DataError(path.string() + ": no rows");
    }
    if (lower(trim(lines[0])) != "id,score,label") {
        throw DataError(path.string() + ":1: expected header 'id,score,label', got '" + lines[0] +
                        "'");
    }
    ScoreSet set;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split_csv_line(lines[i]);
        if (fields.size() != 3) {
            throw DataError(path.string() + ":" + std::to_string(i + 1) +
                            ": expected 3 fields (id,score,label), got " +
                            std::to_string(fields.size()));
        }
        set.ids.push_back(fields[0]);
        const double score = parse_double(fields[1], path, i + 1, "score");
        if (!std::isfinite(score)) {
            throw DataError(path.string() + ":" + std::to_string(i + 1) +
                            ": score must be finite");
        }
        set.scores.push_back(score);
        const std::string& lab = fields[2];
        if (lab == "0") {
            set.labels.push_back(0);
        } else if (lab == "1") {
            set.labels.push_back(1);
        } else {
            throw DataError(path.string() + ":" + std::to_string(i + 1) +
                            ": label must be 0 or 1, got '" + lab + "'");
        }
    }
    if (set.scores.empty()) throw DataError(path.string() + ": no rows");
    return set;
}

void write_scores_csv(const std::filesystem::path& path, const ScoreSet& set) {
    std::string out = "id,score,label\n";
    for (std::size_t i = 0; i < set.scores.size(); ++i) {
        out += set.ids[i];
        out += ',';
        out += format_double(set.scores[i]);
        out += ',';
        out += std::to_string(set.labels[i]);
        out += '\n';
    }
    atomic_write_text(path, out);
}

RocCurve read_rocpoints_csv(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || (lines.size() == 1 && trim(lines[0]).empty())) {
        throw DataError(path.string() + ": no rows");
    }
    const std::string header = lower(trim(lines[0]));
    bool with_threshold;
    if (header == "fpr,tpr") {
        with_threshold = false;
    } else if (header == "fpr,tpr,threshold") {
        with_threshold = true;
    } else {
        throw DataError(path.string() +
                        ":1: expected header 'fpr,tpr' or 'fpr,tpr,threshold', got '" + lines[0] +
                        "'");
    }
    std::vector<RocPoint> pts;
    std::vector<double> thresholds;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split_csv_line(lines[i]);
        const std::size_t expected = with_threshold ? 3 : 2;
        if (fields.size() != expected) {
            throw DataError(path.string() + ":" + std::to_string(i + 1) + ": expected " +
                            std::to_string(expected) + " fields, got " +
                            std::to_string(fields.size()));
        }
        RocPoint p{parse_double(fields[0], path, i + 1, "fpr"),
                   parse_double(fields[1], path, i + 1, "tpr")};
        if (!(p.fpr >= 0.0 && p.fpr <= 1.0 && p.tpr >= 0.0 && p.tpr <= 1.0)) {
            throw DataError(path.string() + ":" + std::to_string(i + 1) +
                            ": point outside the unit square");
        }
        pts.push_back(p);
        if (with_threshold) {
            thresholds.push_back(parse_double(fields[2], path, i + 1, "threshold"));
        }
    }
    if (pts.empty()) throw DataError(path.string() + ": no rows");
    if (with_threshold) return curve_from_points(std::move(pts), std::move(thresholds));
    return curve_from_points(std::move(pts));
}

void write_rocpoints_csv(const std::filesystem::path& path, const RocCurve& curve) {
    std::string out = curve.thresholds ? "fpr,tpr,threshold\n" : "fpr,tpr\n";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        out += format_double(curve.points[i].fpr);
        out += ',';
        out += format_double(curve.points[i].tpr);
        if (curve.thresholds) {
            out += ',';
            out += format_double((*curve.thresholds)[i]);
        }
        out += '\n';
    }
    atomic_write_text(path, out);
}

DatasetProfile profile_from_labels(std::span<const int> labels) {
    long long pos = 0, neg = 0;
    for (int lab : labels) {
        if (lab == 1) {
            ++pos;
        } else if (lab == 0) {
            ++neg;
        } else {
            throw DataError("labels must be 0 or 1");
        }
    }
    if (pos == 0) throw DataError("labels contain no positive (1) examples");
    if (neg == 0) throw DataError("labels contain no negative (0) examples");
    return DatasetProfile(pos, neg);
}

} // namespace pvoros
