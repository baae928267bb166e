#pragma once

// Test-only helpers kept independent of the production code paths they check.

#include "pvoros/cost.hpp"
#include "pvoros/feasible_region.hpp"
#include "pvoros/roc_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using pvoros::RocPoint;

// Gift-wrapping upper hull from (0,0) toward increasing x: at each step pick
// the remaining point with maximal slope (ties resolved toward the farthest
// point, which drops collinear interiors). Independent of the monotone scan.
inline std::vector<RocPoint> giftwrap_upper_hull(std::vector<RocPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RocPoint& a, const RocPoint& b) {
        if (a.fpr != b.fpr) return a.fpr < b.fpr;
        return a.tpr < b.tpr;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const RocPoint& a, const RocPoint& b) {
                              return a.fpr == b.fpr && a.tpr == b.tpr;
                          }),
              pts.end());
    std::vector<RocPoint> hull;
    RocPoint cur = pts.front();
    hull.push_back(cur);
    while (true) {
        bool found = false;
        RocPoint best{};
        double best_slope = -std::numeric_limits<double>::infinity();
        double best_dist = -1.0;
        for (const RocPoint& p : pts) {
            const double dx = p.fpr - cur.fpr;
            const double dy = p.tpr - cur.tpr;
            if (dx < 0.0 || (dx == 0.0 && dy <= 0.0)) continue;
            const double slope =
                dx == 0.0 ? std::numeric_limits<double>::infinity() : dy / dx;
            const double dist = dx * dx + dy * dy;
            if (slope > best_slope || (slope == best_slope && dist > best_dist)) {
                best_slope = slope;
                best_dist = dist;
                best = p;
                found = true;
            }
        }
        if (!found) break;
        hull.push_back(best);
        cur = best;
    }
    return hull;
}

inline bool same_points(const std::vector<RocPoint>& a, const std::vector<RocPoint>& b,
                        double tol = 1e-12) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!pvoros::nearly_equal(a[i], b[i], tol)) return false;
    }
    return true;
}

// Canonical form for comparing convex rings: dedup, rotate to the
// lexicographically smallest vertex.
inline std::vector<RocPoint> canonical_ring(std::vector<RocPoint> ring, double tol = 1e-9) {
    ring = pvoros::dedup_ring(std::move(ring), tol);
    if (ring.empty()) return ring;
    std::size_t start = 0;
    for (std::size_t i = 1; i < ring.size(); ++i) {
        if (ring[i].fpr < ring[start].fpr - tol ||
            (std::fabs(ring[i].fpr - ring[start].fpr) <= tol && ring[i].tpr < ring[start].tpr)) {
            start = i;
        }
    }
    std::rotate(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(start), ring.end());
    return ring;
}

// Random regime-conformant profile/constraints draw.
struct RandomRegion {
    pvoros::DatasetProfile profile;
    pvoros::Constraints constraints;
};

inline RandomRegion random_region(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> pos_dist(20, 2000);
    const long long n_pos = pos_dist(rng);
    std::uniform_int_distribution<long long> neg_dist(n_pos + 1, 20000);
    const long long n_neg = neg_dist(rng);
    const pvoros::DatasetProfile profile(n_pos, n_neg);
    const double p = profile.prevalence();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double alpha = p + (0.95 - p) * (0.02 + 0.96 * unit(rng));
    const double kappa = profile.total() * (0.01 + 0.97 * unit(rng));
    return RandomRegion{profile, pvoros::Constraints(alpha, kappa)};
}

// Random point inside a convex polygon: normalized positive mixture of the
// vertices.
inline RocPoint random_interior_point(const std::vector<RocPoint>& ring, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::vector<double> w(ring.size());
    double sum = 0.0;
    for (double& x : w) {
        x = unit(rng);
        sum += x;
    }
    RocPoint out{0.0, 0.0};
    for (std::size_t i = 0; i < ring.size(); ++i) {
        out.fpr += ring[i].fpr * w[i] / sum;
        out.tpr += ring[i].tpr * w[i] / sum;
    }
    return out;
}

} // namespace oracle
