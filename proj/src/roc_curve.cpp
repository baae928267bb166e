#include "pvoros/roc_curve.hpp"

#include "pvoros/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace pvoros {

namespace {

// cross(o->a, o->b); positive = counterclockwise turn.
double cross(const RocPoint& o, const RocPoint& a, const RocPoint& b) {
    return (a.fpr - o.fpr) * (b.tpr - o.tpr) - (a.tpr - o.tpr) * (b.fpr - o.fpr);
}

bool point_less(const RocPoint& a, const RocPoint& b) {
    if (a.fpr != b.fpr) return a.fpr < b.fpr;
    return a.tpr < b.tpr;
}

} // namespace

RocCurve build_roc_curve(std::span<const double> scores, std::span<const int> labels) {
    if (scores.empty()) throw DataError("cannot build a curve from empty score list");
    if (scores.size() != labels.size()) {
        throw DataError("scores and labels differ in length (" + std::to_string(scores.size()) +
                        " vs " + std::to_string(labels.size()) + ")");
    }
    for (double s : scores) {
        if (std::isnan(s)) throw DataError("scores must not contain NaN");
    }
    long long n_pos = 0, n_neg = 0;
    for (int lab : labels) {
        if (lab == 1) {
            ++n_pos;
        } else if (lab == 0) {
            ++n_neg;
        } else {
            throw DataError("labels must be 0 or 1, got " + std::to_string(lab));
        }
    }
    if (n_pos == 0) throw DataError("labels contain no positive (1) examples");
    if (n_neg == 0) throw DataError("labels contain no negative (0) examples");

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return scores[i] > scores[j]; });

    RocCurve curve;
    curve.points.push_back(RocPoint{0.0, 0.0});
    std::vector<double> thresholds{std::numeric_limits<double>::infinity()};

    long long tp = 0, fp = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        const double s = scores[order[i]];
        // whole tie group crosses the threshold together
        while (i < order.size() && scores[order[i]] == s) {
            if (labels[order[i]] == 1) {
                ++tp;
            } else {
                ++fp;
            }
            ++i;
        }
        curve.points.push_back(RocPoint{static_cast<double>(fp) / static_cast<double>(n_neg),
                                        static_cast<double>(tp) / static_cast<double>(n_pos)});
        thresholds.push_back(s);
    }
    curve.thresholds = std::move(thresholds);
    return curve;
}

RocCurve curve_from_points(std::vector<RocPoint> pts, std::optional<std::vector<double>> thr) {
    if (thr && thr->size() != pts.size()) {
        throw DataError("threshold list length does not match point list length");
    }
    for (const RocPoint& p : pts) {
        if (!(p.fpr >= 0.0 && p.fpr <= 1.0 && p.tpr >= 0.0 && p.tpr <= 1.0)) {
            throw DataError("roc point outside the unit square: (" + std::to_string(p.fpr) +
                            ", " + std::to_string(p.tpr) + ")");
        }
    }

    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return point_less(pts[i], pts[j]); });

    RocCurve curve;
    if (thr) curve.thresholds.emplace();
    auto push = [&](const RocPoint& p, double threshold) {
        if (!curve.points.empty() && curve.points.back().fpr == p.fpr &&
            curve.points.back().tpr == p.tpr) {
            return; // exact duplicate, keep first provenance
        }
        curve.points.push_back(p);
        if (curve.thresholds) curve.thresholds->push_back(threshold);
    };

    push(RocPoint{0.0, 0.0}, std::numeric_limits<double>::infinity());
    for (std::size_t idx : order) {
        push(pts[idx], thr ? (*thr)[idx] : 0.0);
    }
    push(RocPoint{1.0, 1.0}, -std::numeric_limits<double>::infinity());
    return curve;
}

HullCurve upper_hull(const RocCurve& curve) {
    if (curve.points.empty()) throw DataError("cannot take the hull of an empty curve");

    std::vector<std::size_t> order(curve.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return point_less(curve.points[i], curve.points[j]);
    });

    // monotone scan keeping strictly clockwise turns (concave chain)
    std::vector<std::size_t> stack;
    for (std::size_t idx : order) {
        const RocPoint& p = curve.points[idx];
        if (!stack.empty()) {
            const RocPoint& last = curve.points[stack.back()];
            if (last.fpr == p.fpr && last.tpr == p.tpr) continue;
        }
        while (stack.size() >= 2 &&
               cross(curve.points[stack[stack.size() - 2]], curve.points[stack.back()], p) >=
                   0.0) {
            stack.pop_back();
        }
        stack.push_back(idx);
    }

    HullCurve hull;
    hull.points.reserve(stack.size());
    if (curve.thresholds) hull.thresholds.emplace();
    for (std::size_t idx : stack) {
        hull.points.push_back(curve.points[idx]);
        if (curve.thresholds) hull.thresholds->push_back((*curve.thresholds)[idx]);
    }
    return hull;
}

double auroc(const RocCurve& curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const RocPoint& a = curve.points[i - 1];
        const RocPoint& b = curve.points[i];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
    }
    return area;
}

} // namespace pvoros
