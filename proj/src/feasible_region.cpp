#include "pvoros/feasible_region.hpp"

#include <array>
#include <cmath>
#include <string>

namespace pvoros {

Constraints::Constraints(double alpha_value, double kappa_value)
    : alpha(alpha_value), kappa(kappa_value) {
    if (!(alpha_value >= 0.0 && alpha_value <= 1.0)) {
        throw ConfigError("minimum precision alpha must lie in [0,1], got " +
                          std::to_string(alpha_value));
    }
    if (!(kappa_value >= 0.0)) {
        throw ConfigError("maximum capacity kappa must be nonnegative, got " +
                          std::to_string(kappa_value));
    }
}

bool practical_assumptions_hold(const DatasetProfile& profile, const Constraints& cons) {
    const double p = profile.prevalence();
    return profile.negatives_dominant() && cons.alpha > p && cons.alpha < 1.0 &&
           cons.kappa > 0.0 && cons.kappa < profile.total();
}

double never_alarm_t_bound(const DatasetProfile& profile, double alpha) {
    const double an = alpha * static_cast<double>(profile.n_neg);
    const double ap = (1.0 - alpha) * static_cast<double>(profile.n_pos);
    return an / (an + ap);
}

const char* to_string(RegionCase tag) {
    switch (tag) {
    case RegionCase::Case1Triangle: return "Case1Triangle";
    case RegionCase::Case2Quadrilateral: return "Case2Quadrilateral";
    case RegionCase::Case3Triangle: return "Case3Triangle";
    case RegionCase::Case3APentagon: return "Case3APentagon";
    case RegionCase::Case3BTrapezoid: return "Case3BTrapezoid";
    case RegionCase::DegeneratePrecisionOnly: return "DegeneratePrecisionOnly";
    case RegionCase::DegenerateCapacityOnly: return "DegenerateCapacityOnly";
    case RegionCase::DegeneratePoint: return "DegeneratePoint";
    case RegionCase::DegenerateSegment: return "DegenerateSegment";
    case RegionCase::Empty: return "Empty";
    }
    return "Unknown";
}

double precision_slope(const DatasetProfile& profile, double alpha) {
    return alpha * static_cast<double>(profile.n_neg) /
           ((1.0 - alpha) * static_cast<double>(profile.n_pos));
}

Line precision_line(const DatasetProfile& profile, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("precision line is degenerate for alpha = " + std::to_string(alpha) +
                          "; only 0 < alpha < 1 defines a proper bound line");
    }
    // alpha*|N|*x - (1-alpha)*|P|*y = 0; feasible side eval <= 0
    return Line{alpha * static_cast<double>(profile.n_neg),
                -(1.0 - alpha) * static_cast<double>(profile.n_pos), 0.0};
}

Line capacity_line(const DatasetProfile& profile, double kappa) {
    // |N|*x + |P|*y = kappa; feasible side eval <= 0
    return Line{static_cast<double>(profile.n_neg), static_cast<double>(profile.n_pos), kappa};
}

bool is_feasible(const RocPoint& p, const DatasetProfile& profile, const Constraints& cons) {
    bool precision_ok;
    if (cons.alpha >= 1.0) {
        precision_ok = p.fpr <= kRateTol; // precision 1 means no false positives
    } else {
        precision_ok = p.tpr >= precision_slope(profile, cons.alpha) * p.fpr - kRateTol;
    }
    const double load = static_cast<double>(profile.n_pos) * p.tpr +
                        static_cast<double>(profile.n_neg) * p.fpr;
    return precision_ok && load <= cons.kappa + kCountTol;
}

RocPoint vertex_alpha_kappa(const DatasetProfile& profile, const Constraints& cons) {
    return RocPoint{(1.0 - cons.alpha) * cons.kappa / static_cast<double>(profile.n_neg),
                    cons.alpha * cons.kappa / static_cast<double>(profile.n_pos)};
}

RocPoint vertex_alpha_1(const DatasetProfile& profile, double alpha) {
    return RocPoint{(1.0 - alpha) * static_cast<double>(profile.n_pos) /
                        (alpha * static_cast<double>(profile.n_neg)),
                    1.0};
}

RocPoint vertex_1_alpha(const DatasetProfile& profile, double alpha) {
    return RocPoint{1.0, alpha * static_cast<double>(profile.n_neg) /
                             ((1.0 - alpha) * static_cast<double>(profile.n_pos))};
}

RocPoint vertex_kappa_1(const DatasetProfile& profile, double kappa) {
    return RocPoint{(kappa - static_cast<double>(profile.n_pos)) /
                        static_cast<double>(profile.n_neg),
                    1.0};
}

RocPoint vertex_0_kappa(const DatasetProfile& profile, double kappa) {
    return RocPoint{0.0, kappa / static_cast<double>(profile.n_pos)};
}

RocPoint vertex_kappa_0(const DatasetProfile& profile, double kappa) {
    return RocPoint{kappa / static_cast<double>(profile.n_neg), 0.0};
}

RocPoint vertex_1_kappa(const DatasetProfile& profile, double kappa) {
    return RocPoint{1.0, (kappa - static_cast<double>(profile.n_neg)) /
                             static_cast<double>(profile.n_pos)};
}

RegionCase classify_region(const DatasetProfile& profile, const Constraints& cons) {
    const double n_pos = static_cast<double>(profile.n_pos);
    const double n_neg = static_cast<double>(profile.n_neg);
    const double total = profile.total();

    if (cons.kappa <= 0.0) return RegionCase::DegeneratePoint; // only (0,0) allowed
    if (cons.alpha >= 1.0) return RegionCase::DegenerateSegment; // y-axis segment

    const bool precision_cuts = cons.alpha > 0.0;
    const bool capacity_cuts = cons.kappa < total;
    if (!precision_cuts && !capacity_cuts) return RegionCase::Empty; // no active constraint
    if (!precision_cuts) return RegionCase::DegenerateCapacityOnly;
    if (!capacity_cuts) return RegionCase::DegeneratePrecisionOnly;

    // both bounds cut the square; dispatch on where they intersect
    const double x_ak = (1.0 - cons.alpha) * cons.kappa / n_neg;
    if (x_ak > 1.0) {
        // intersection right of the square: only reachable when alpha < prevalence
        return cons.kappa >= n_pos ? RegionCase::Case3APentagon : RegionCase::Case3BTrapezoid;
    }
    if (cons.alpha * cons.kappa >= n_pos) return RegionCase::Case3Triangle; // v_ak at/above y=1
    return cons.kappa >= n_pos ? RegionCase::Case2Quadrilateral : RegionCase::Case1Triangle;
}

std::vector<RocPoint> halfplane_region_polygon(const DatasetProfile& profile,
                                               const Constraints& cons) {
    std::vector<RocPoint> ring{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    if (cons.alpha >= 1.0) {
        ring = clip_keep_nonpositive(ring, Line{1.0, 0.0, 0.0}); // x <= 0
    } else if (cons.alpha > 0.0) {
        ring = clip_keep_nonpositive(ring, precision_line(profile, cons.alpha));
    }
    if (cons.kappa < profile.total()) {
        ring = clip_keep_nonpositive(ring, capacity_line(profile, cons.kappa));
    }
    ring = dedup_ring(std::move(ring), 1e-12);
    return rotate_ring_to(std::move(ring), RocPoint{0.0, 0.0}, 1e-12);
}

FeasibleRegion region_polygon(const DatasetProfile& profile, const Constraints& cons) {
    const RegionCase tag = classify_region(profile, cons);
    std::vector<RocPoint> verts;
    switch (tag) {
    case RegionCase::Case1Triangle:
        verts = {RocPoint{0.0, 0.0}, vertex_alpha_kappa(profile, cons),
                 vertex_0_kappa(profile, cons.kappa)};
        break;
    case RegionCase::Case2Quadrilateral:
        verts = {RocPoint{0.0, 0.0}, vertex_alpha_kappa(profile, cons),
                 vertex_kappa_1(profile, cons.kappa), RocPoint{0.0, 1.0}};
        break;
    case RegionCase::Case3Triangle:
        verts = {RocPoint{0.0, 0.0}, vertex_alpha_1(profile, cons.alpha), RocPoint{0.0, 1.0}};
        break;
    case RegionCase::Case3APentagon:
        verts = {RocPoint{0.0, 0.0}, vertex_1_alpha(profile, cons.alpha),
                 vertex_1_kappa(profile, cons.kappa), vertex_kappa_1(profile, cons.kappa),
                 RocPoint{0.0, 1.0}};
        break;
    case RegionCase::Case3BTrapezoid:
        verts = {RocPoint{0.0, 0.0}, vertex_1_alpha(profile, cons.alpha),
                 vertex_1_kappa(profile, cons.kappa), vertex_0_kappa(profile, cons.kappa)};
        break;
    case RegionCase::DegeneratePrecisionOnly:
    case RegionCase::DegenerateCapacityOnly:
        verts = halfplane_region_polygon(profile, cons);
        break;
    default:
        throw DegenerateRegionError(tag, std::string("feasible region has zero area (") +
                                             to_string(tag) + ")");
    }
    const double area = shoelace_area(verts);
    if (area <= 0.0) {
        throw DegenerateRegionError(tag, std::string("feasible region has zero area (") +
                                             to_string(tag) + ")");
    }
    return FeasibleRegion{tag, std::move(verts), area, profile, cons};
}

double region_area_closed_form(const DatasetProfile& profile, const Constraints& cons) {
    const double n_pos = static_cast<double>(profile.n_pos);
    const double n_neg = static_cast<double>(profile.n_neg);
    switch (classify_region(profile, cons)) {
    case RegionCase::Case1Triangle:
        return (1.0 - cons.alpha) * cons.kappa * cons.kappa / (2.0 * n_neg * n_pos);
    case RegionCase::Case2Quadrilateral:
        return (2.0 * cons.kappa * n_pos - cons.alpha * cons.kappa * cons.kappa - n_pos * n_pos) /
               (2.0 * n_neg * n_pos);
    case RegionCase::Case3Triangle:
        return (1.0 - cons.alpha) * n_pos / (2.0 * cons.alpha * n_neg);
    default:
        throw ConfigError("closed-form area is defined only for the three standard region cases");
    }
}

} // namespace pvoros
