#pragma once

#include "pvoros/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pvoros {

// Ordered operating points of a scored classifier. Points are sorted by
// nondecreasing fpr (ties by tpr) and always contain (0,0) and (1,1) after
// construction. `thresholds`, when present, aligns with `points`: the score
// cutoff that realizes each point (predict positive iff score >= threshold;
// +inf for (0,0), -inf for (1,1) when synthesized).
struct RocCurve {
    std::vector<RocPoint> points;
    std::optional<std::vector<double>> thresholds;
};

// Threshold sweep from +inf downward; score ties move together as one step.
// Throws DataError on empty/mismatched input or single-class labels.
RocCurve build_roc_curve(std::span<const double> scores, std::span<const int> labels);

// Normalize raw points into a curve: sort, dedup exact duplicates, append
// (0,0)/(1,1) when missing. Threshold list (if given) is permuted alongside.
RocCurve curve_from_points(std::vector<RocPoint> pts,
                           std::optional<std::vector<double>> thresholds = std::nullopt);

// Upper concave chain from (0,0) to (1,1): strictly decreasing segment
// slopes, every curve point on or below the chain. Provenance carried.
struct HullCurve {
    std::vector<RocPoint> points;
    std::optional<std::vector<double>> thresholds;
};

HullCurve upper_hull(const RocCurve& curve);

// Trapezoidal area under the full curve polyline.
double auroc(const RocCurve& curve);

} // namespace pvoros
