#include "pvoros/partial_area.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pvoros {

namespace {

RationalLinearForm alpha_t_form(double h, double k, const DatasetProfile& profile, double alpha) {
    const double n_pos = static_cast<double>(profile.n_pos);
    const double n_neg = static_cast<double>(profile.n_neg);
    const double cp = alpha * n_neg + (1.0 - alpha) * n_pos; // C'
    const double dp = alpha * n_neg;                         // D'
    const double ap = (1.0 - alpha) * n_pos * (h + k) / cp;  // A'
    const double bp = (1.0 - alpha) * n_pos * (k - (h + k) * alpha * n_neg / cp); // B'
    // x(t) = A' - B'/(C' t - D')
    return RationalLinearForm{ap, -bp, cp, -dp};
}

RationalLinearForm kappa_t_form(double h, double k, const DatasetProfile& profile, double kappa) {
    const double n_pos = static_cast<double>(profile.n_pos);
    const double n_neg = static_cast<double>(profile.n_neg);
    if (profile.n_pos == profile.n_neg) {
        throw ConfigError("capacity-boundary rational form degenerates when |P| = |N|; "
                          "use the direct line intersection");
    }
    const double c = n_pos - n_neg;
    const double d = n_neg;
    const double a = (n_pos * (h + k) - kappa) / c;
    const double b = kappa - k * n_pos - n_neg * (n_pos * (h + k) - kappa) / c;
    // x(t) = A + B/(C t + D)
    return RationalLinearForm{a, b, c, d};
}

double x_alpha_t(double h, double k, const DatasetProfile& profile, double alpha, double t) {
    return alpha_t_form(h, k, profile, alpha).eval(t);
}

double x_kappa_t(double h, double k, const DatasetProfile& profile, double kappa, double t) {
    if (profile.n_pos == profile.n_neg) {
        // direct intersection of the iso line and the capacity line
        const double n = static_cast<double>(profile.n_pos);
        return (kappa - k * n + t * (n * (h + k) - kappa)) / n;
    }
    return kappa_t_form(h, k, profile, kappa).eval(t);
}

} // namespace

const char* to_string(PartialAreaCase c) {
    switch (c) {
    case PartialAreaCase::TriangleAlphaT: return "TriangleAlphaT";
    case PartialAreaCase::QuadAlphaKappaT: return "QuadAlphaKappaT";
    case PartialAreaCase::Pentagon: return "Pentagon";
    case PartialAreaCase::QuadAlpha1T: return "QuadAlpha1T";
    case PartialAreaCase::EmptyBelow: return "EmptyBelow";
    case PartialAreaCase::FullRegion: return "FullRegion";
    case PartialAreaCase::GenericClip: return "GenericClip";
    }
    return "Unknown";
}

RationalLinearForm rational_linear_coeffs(const RocPoint& point, const FeasibleRegion& region,
                                          WhichBoundary which) {
    if (which == WhichBoundary::AlphaT) {
        return alpha_t_form(point.fpr, point.tpr, region.profile, region.constraints.alpha);
    }
    return kappa_t_form(point.fpr, point.tpr, region.profile, region.constraints.kappa);
}

double clip_area_oracle(const FeasibleRegion& region, const IsoLine& iso, bool keep_below) {
    // higher-cost side (below the line for t < 1) is eval >= 0
    const Line keep = keep_below ? iso.line.flipped() : iso.line;
    return shoelace_area(clip_keep_nonpositive(region.vertices, keep));
}

double unit_square_area_below(const IsoLine& iso) {
    static const std::vector<RocPoint> square{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    return shoelace_area(clip_keep_nonpositive(square, iso.line.flipped()));
}

PartialAreaResult lesser_vertices(const RocPoint& point, const CostModel& m,
                                  const FeasibleRegion& region) {
    if (!region.nondegenerate_case()) {
        throw ConfigError(std::string("lesser-classifier polygon requires a Case1/2/3 region, "
                                      "got ") +
                          to_string(region.tag));
    }
    if (!is_feasible(point, region.profile, region.constraints)) {
        throw ConfigError("query point (" + std::to_string(point.fpr) + ", " +
                          std::to_string(point.tpr) + ") is not feasible for these constraints");
    }

    const double t = m.t;
    const double c = cost(point, m);
    double min_cost = cost(region.vertices.front(), m);
    double max_cost = min_cost;
    for (const RocPoint& v : region.vertices) {
        const double vc = cost(v, m);
        min_cost = std::min(min_cost, vc);
        max_cost = std::max(max_cost, vc);
    }

    PartialAreaResult result;
    if (c >= max_cost) {
        result.polygon_case = PartialAreaCase::EmptyBelow;
        return result;
    }
    if (c <= min_cost) {
        result.polygon_case = PartialAreaCase::FullRegion;
        result.vertices = region.vertices;
        result.area = region.area;
        result.normalized = 1.0;
        return result;
    }

    const double origin_cost = 1.0 - t;
    if (c > origin_cost) {
        // t beyond the never-alarm bound: the lesser region no longer touches
        // (0,0) and the closed-form shapes do not apply; clip directly.
        const IsoLine iso = iso_line_from_cost(c, m);
        result.vertices = clip_keep_nonpositive(region.vertices, iso.line.flipped());
        result.polygon_case = PartialAreaCase::GenericClip;
        result.area = std::clamp(shoelace_area(result.vertices), 0.0, region.area);
        result.normalized = result.area / region.area;
        return result;
    }

    // Canonical equal-cost anchor on the y-axis: every constructed vertex then
    // depends on (cost, t) only, so equal-cost queries yield identical polygons.
    const double y0 = 1.0 - c / (1.0 - t);
    const double h0 = 0.0;
    const RocPoint v00{0.0, 0.0};
    const RocPoint v0t{0.0, y0};
    const DatasetProfile& prof = region.profile;
    const double alpha = region.constraints.alpha;
    const double kappa = region.constraints.kappa;

    auto alpha_vertex = [&]() {
        const double x = x_alpha_t(h0, y0, prof, alpha, t);
        return RocPoint{x, precision_slope(prof, alpha) * x};
    };
    auto kappa_vertex = [&]() {
        const double x = x_kappa_t(h0, y0, prof, kappa, t);
        return RocPoint{x, (kappa - static_cast<double>(prof.n_neg) * x) /
                               static_cast<double>(prof.n_pos)};
    };
    auto top_vertex = [&]() { return RocPoint{c / t, 1.0}; };

    const RocPoint v_ak = vertex_alpha_kappa(prof, region.constraints);
    switch (region.tag) {
    case RegionCase::Case1Triangle: {
        if (c >= cost(v_ak, m)) {
            result.polygon_case = PartialAreaCase::TriangleAlphaT;
            result.vertices = {v00, alpha_vertex(), v0t};
        } else {
            result.polygon_case = PartialAreaCase::QuadAlphaKappaT;
            result.vertices = {v00, v_ak, kappa_vertex(), v0t};
        }
        break;
    }
    case RegionCase::Case2Quadrilateral: {
        const RocPoint v_k1 = vertex_kappa_1(prof, kappa);
        if (c >= cost(v_ak, m)) {
            result.polygon_case = PartialAreaCase::TriangleAlphaT;
            result.vertices = {v00, alpha_vertex(), v0t};
        } else if (c >= cost(v_k1, m)) {
            result.polygon_case = PartialAreaCase::QuadAlphaKappaT;
            result.vertices = {v00, v_ak, kappa_vertex(), v0t};
        } else {
            result.polygon_case = PartialAreaCase::Pentagon;
            result.vertices = {v00, v_ak, v_k1, top_vertex(), v0t};
        }
        break;
    }
    case RegionCase::Case3Triangle: {
        const RocPoint v_a1 = vertex_alpha_1(prof, alpha);
        if (c >= cost(v_a1, m)) {
            result.polygon_case = PartialAreaCase::TriangleAlphaT;
            result.vertices = {v00, alpha_vertex(), v0t};
        } else {
            result.polygon_case = PartialAreaCase::QuadAlpha1T;
            result.vertices = {v00, v_a1, top_vertex(), v0t};
        }
        break;
    }
    default:
        break; // unreachable, guarded above
    }

    result.area = std::clamp(shoelace_area(result.vertices), 0.0, region.area);
    result.normalized = result.area / region.area;
    return result;
}

} // namespace pvoros
