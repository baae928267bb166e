#pragma once

#include "pvoros/cost.hpp"
#include "pvoros/feasible_region.hpp"

#include <vector>

namespace pvoros {

// x(t) = a + b / (c*t + d). Undefined where c*t + d = 0.
struct RationalLinearForm {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double d{1.0};

    double eval(double t) const { return a + b / (c * t + d); }
};

enum class WhichBoundary { AlphaT, KappaT };

// x-coordinate of the iso line's intersection with the precision line
// (AlphaT) or the capacity line (KappaT), as a rational-linear function of t
// for the fixed query point. Throws ConfigError for KappaT when
// |P| = |N| (the form degenerates; use the direct intersection instead).
RationalLinearForm rational_linear_coeffs(const RocPoint& point, const FeasibleRegion& region,
                                          WhichBoundary which);

enum class PartialAreaCase {
    TriangleAlphaT,   // (0,0) v_at v_0t
    QuadAlphaKappaT,  // (0,0) v_ak v_kt v_0t
    Pentagon,         // (0,0) v_ak v_k1 v_t1 v_0t
    QuadAlpha1T,      // (0,0) v_a1 v_t1 v_0t
    EmptyBelow,       // iso line on or below the whole region
    FullRegion,       // iso line on or above the whole region
    GenericClip,      // t beyond the never-alarm bound; region clipped directly
};

const char* to_string(PartialAreaCase c);

struct PartialAreaResult {
    double area{0.0};       // area of the lesser-classifier polygon
    double normalized{0.0}; // area / region area
    PartialAreaCase polygon_case{PartialAreaCase::EmptyBelow};
    std::vector<RocPoint> vertices;
};

// Area of the sub-polygon of the region whose points cost strictly more than
// `point` at t. Case dispatch compares cost(point, t) with the region's
// vertex costs; vertices come from the closed forms above. Throws
// ConfigError for infeasible points or non-Case1/2/3 regions.
PartialAreaResult lesser_vertices(const RocPoint& point, const CostModel& m,
                                  const FeasibleRegion& region);

// Independent route: single half-plane clip of the region polygon against
// the iso line, shoelace area of the kept side. keep_below keeps the
// higher-cost side (geometrically below the line for t < 1).
double clip_area_oracle(const FeasibleRegion& region, const IsoLine& iso, bool keep_below);

// Area of the unit square on the higher-cost side of the iso line.
double unit_square_area_below(const IsoLine& iso);

} // namespace pvoros
