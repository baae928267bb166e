#pragma once

#include "pvoros/dataset.hpp"
#include "pvoros/errors.hpp"
#include "pvoros/geometry.hpp"

#include <string>
#include <vector>

namespace pvoros {

// Comparison tolerances used by feasibility tests: rates (fpr/tpr scale) and
// predicted-positive counts.
inline constexpr double kRateTol = 1e-12;
inline constexpr double kCountTol = 1e-9;

// Minimum precision alpha plus maximum predicted-positive count kappa.
// kappa is always an absolute count here; fractional input is resolved at
// the CLI layer.
struct Constraints {
    double alpha{0.0};
    double kappa{0.0};

    Constraints(double alpha_value, double kappa_value);
};

// The working regime: imbalanced data, precision target above prevalence,
// capacity that rules out always-alarm.
bool practical_assumptions_hold(const DatasetProfile& profile, const Constraints& cons);

// Largest t at which the iso line through (0,0) still misses the region
// interior: alpha*|N| / (alpha*|N| + (1-alpha)*|P|).
double never_alarm_t_bound(const DatasetProfile& profile, double alpha);

enum class RegionCase {
    Case1Triangle,
    Case2Quadrilateral,
    Case3Triangle,
    Case3APentagon,
    Case3BTrapezoid,
    DegeneratePrecisionOnly,
    DegenerateCapacityOnly,
    DegeneratePoint,
    DegenerateSegment,
    Empty,
};

const char* to_string(RegionCase tag);

struct DegenerateRegionError : ConfigError {
    RegionCase tag;
    DegenerateRegionError(RegionCase t, const std::string& msg) : ConfigError(msg), tag(t) {}
};

// Minimum precision line through the origin: slope alpha*|N| / ((1-alpha)*|P|).
// Feasible side is eval <= 0. Requires 0 < alpha < 1.
Line precision_line(const DatasetProfile& profile, double alpha);
double precision_slope(const DatasetProfile& profile, double alpha);

// Maximum capacity line |N|*x + |P|*y = kappa. Feasible side is eval <= 0.
Line capacity_line(const DatasetProfile& profile, double kappa);

// Both bounds with the documented tolerances; (0,0) is feasible by
// convention (zero predictions).
bool is_feasible(const RocPoint& p, const DatasetProfile& profile, const Constraints& cons);

// Every (alpha, kappa, profile) maps to exactly one tag.
RegionCase classify_region(const DatasetProfile& profile, const Constraints& cons);

struct FeasibleRegion {
    RegionCase tag{RegionCase::Empty};
    std::vector<RocPoint> vertices; // counterclockwise, starting at (0,0) when present
    double area{0.0};
    DatasetProfile profile;
    Constraints constraints;

    bool nondegenerate_case() const {
        return tag == RegionCase::Case1Triangle || tag == RegionCase::Case2Quadrilateral ||
               tag == RegionCase::Case3Triangle;
    }
};

// Exact case-based vertex lists for the five nondegenerate cases; generic
// half-plane construction for positive-area single-bound tags. Throws
// DegenerateRegionError for zero-area tags.
FeasibleRegion region_polygon(const DatasetProfile& profile, const Constraints& cons);

// Independent constructor: unit square clipped against both bounds. Shipped
// (not test-only) and used as the internal oracle for the case-based lists.
std::vector<RocPoint> halfplane_region_polygon(const DatasetProfile& profile,
                                               const Constraints& cons);

// Closed-form areas for Case1/2/3 only; throws ConfigError otherwise.
double region_area_closed_form(const DatasetProfile& profile, const Constraints& cons);

// Boundary vertices (intersections of the bound lines with the square edges
// and each other).
RocPoint vertex_alpha_kappa(const DatasetProfile& profile, const Constraints& cons);
RocPoint vertex_alpha_1(const DatasetProfile& profile, double alpha);
RocPoint vertex_1_alpha(const DatasetProfile& profile, double alpha);
RocPoint vertex_kappa_1(const DatasetProfile& profile, double kappa);
RocPoint vertex_0_kappa(const DatasetProfile& profile, double kappa);
RocPoint vertex_kappa_0(const DatasetProfile& profile, double kappa);
RocPoint vertex_1_kappa(const DatasetProfile& profile, double kappa);

} // namespace pvoros
