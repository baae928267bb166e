#include "pvoros/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pvoros {

bool nearly_equal(const RocPoint& p, const RocPoint& q, double tol) {
    return std::fabs(p.fpr - q.fpr) <= tol && std::fabs(p.tpr - q.tpr) <= tol;
}

double Line::coeff_norm() const {
    return std::hypot(a, b);
}

RocPoint intersect(const Line& l1, const Line& l2) {
    const double det = l1.a * l2.b - l2.a * l1.b;
    const double scale = std::max(l1.coeff_norm() * l2.coeff_norm(), 1e-300);
    if (std::fabs(det) <= 1e-14 * scale) {
        throw std::domain_error("intersect: lines are parallel or nearly parallel");
    }
    return RocPoint{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

double signed_area_twice(std::span<const RocPoint> ring) {
    const std::size_t n = ring.size();
    if (n < 3) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const RocPoint& p = ring[i];
        const RocPoint& q = ring[(i + 1) % n];
        sum += p.fpr * q.tpr - q.fpr * p.tpr;
    }
    return sum;
}

double shoelace_area(std::span<const RocPoint> ring) {
    return std::fabs(signed_area_twice(ring)) / 2.0;
}

std::vector<RocPoint> clip_keep_nonpositive(std::span<const RocPoint> ring, const Line& ln) {
    std::vector<RocPoint> out;
    const std::size_t n = ring.size();
    if (n == 0) return out;
    out.reserve(n + 2);
    const double tol = 1e-12 * std::max(ln.coeff_norm(), 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const RocPoint& cur = ring[i];
        const RocPoint& nxt = ring[(i + 1) % n];
        const double ec = ln.eval(cur);
        const double en = ln.eval(nxt);
        const bool cur_in = ec <= tol;
        const bool nxt_in = en <= tol;
        if (cur_in) out.push_back(cur);
        if (cur_in != nxt_in) {
            // residuals can share a sign inside the tolerance band; clamping
            // keeps the inserted point on the segment
            const double u = std::clamp(ec / (ec - en), 0.0, 1.0);
            out.push_back(RocPoint{cur.fpr + u * (nxt.fpr - cur.fpr),
                                   cur.tpr + u * (nxt.tpr - cur.tpr)});
        }
    }
    return out;
}

std::vector<RocPoint> dedup_ring(std::vector<RocPoint> ring, double tol) {
    if (ring.size() < 2) return ring;
    std::vector<RocPoint> out;
    out.reserve(ring.size());
    for (const RocPoint& p : ring) {
        if (out.empty() || !nearly_equal(out.back(), p, tol)) out.push_back(p);
    }
    while (out.size() > 1 && nearly_equal(out.front(), out.back(), tol)) out.pop_back();
    return out;
}

std::vector<RocPoint> rotate_ring_to(std::vector<RocPoint> ring, const RocPoint& start,
                                     double tol) {
    auto it = std::find_if(ring.begin(), ring.end(),
                           [&](const RocPoint& p) { return nearly_equal(p, start, tol); });
    if (it != ring.end()) std::rotate(ring.begin(), it, ring.end());
    return ring;
}

} // namespace pvoros
