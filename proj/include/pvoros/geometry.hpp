#pragma once

#include <span>
#include <vector>

namespace pvoros {

// A point in ROC space: (false positive rate, true positive rate).
struct RocPoint {
    double fpr{0.0};
    double tpr{0.0};
};

bool nearly_equal(const RocPoint& p, const RocPoint& q, double tol = 1e-9);

// Implicit line a*x + b*y = c. Keeps vertical lines (b = 0) representable.
struct Line {
    double a{0.0};
    double b{0.0};
    double c{0.0};

    // Signed residual; 0 on the line.
    double eval(const RocPoint& q) const { return a * q.fpr + b * q.tpr - c; }
    double coeff_norm() const;
    Line flipped() const { return Line{-a, -b, -c}; }
};

// Intersection of two non-parallel lines. Throws std::domain_error when the
// coefficient matrix is singular.
RocPoint intersect(const Line& l1, const Line& l2);

// Absolute polygon area from ordered boundary vertices.
double shoelace_area(std::span<const RocPoint> ring);

// Counterclockwise-signed doubled area (positive for CCW rings).
double signed_area_twice(std::span<const RocPoint> ring);

// One Sutherland-Hodgman step: clip a convex ring against a half-plane,
// keeping the side where ln.eval(q) <= 0 (tolerance scaled by coefficient
// magnitude so count-scaled lines behave like unit-scaled ones).
std::vector<RocPoint> clip_keep_nonpositive(std::span<const RocPoint> ring, const Line& ln);

// Remove consecutive (and wrap-around) duplicates within tol.
std::vector<RocPoint> dedup_ring(std::vector<RocPoint> ring, double tol = 1e-12);

// Rotate the ring so it starts at the vertex matching `start`, when present.
std::vector<RocPoint> rotate_ring_to(std::vector<RocPoint> ring, const RocPoint& start,
                                     double tol = 1e-9);

} // namespace pvoros
