#include "pvoros/voros.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace pvoros {

namespace {

// Breakpoint where adjacent hull points tie in cost: t = dy/(dx+dy).
double segment_breakpoint(const RocPoint& a, const RocPoint& b) {
    const double dx = b.fpr - a.fpr;
    const double dy = b.tpr - a.tpr;
    return std::clamp(dy / (dx + dy), 0.0, 1.0);
}

std::vector<OptimalRange> ranges_for_prefix(const HullCurve& hull, std::size_t last_feasible) {
    std::vector<OptimalRange> out;
    auto threshold_of = [&](std::size_t i) -> std::optional<double> {
        if (hull.thresholds) return (*hull.thresholds)[i];
        return std::nullopt;
    };
    // chain slopes strictly decrease, so non-positive slopes form a suffix;
    // points past the apex are never optimal for any t in [0,1]
    while (last_feasible >= 1 &&
           hull.points[last_feasible].tpr <= hull.points[last_feasible - 1].tpr) {
        --last_feasible;
    }
    if (last_feasible == 0) {
        out.push_back(OptimalRange{hull.points[0], 0.0, 1.0, threshold_of(0)});
        return out;
    }
    std::vector<double> bp(last_feasible);
    for (std::size_t i = 0; i < last_feasible; ++i) {
        bp[i] = segment_breakpoint(hull.points[i], hull.points[i + 1]);
    }
    out.push_back(OptimalRange{hull.points[last_feasible], 0.0, bp[last_feasible - 1],
                               threshold_of(last_feasible)});
    for (std::size_t i = last_feasible - 1; i >= 1; --i) {
        out.push_back(OptimalRange{hull.points[i], bp[i], bp[i - 1], threshold_of(i)});
    }
    out.push_back(OptimalRange{hull.points[0], bp[0], 1.0, threshold_of(0)});
    return out;
}

const OptimalRange& range_at(const std::vector<OptimalRange>& ranges, double t) {
    // ranges ascend and partition [0,1]
    auto it = std::lower_bound(ranges.begin(), ranges.end(), t,
                               [](const OptimalRange& r, double v) { return r.t_high < v; });
    if (it == ranges.end()) --it;
    return *it;
}

double normalized_lesser_area(const RocPoint& point, const CostModel& m,
                              const FeasibleRegion& region) {
    if (region.nondegenerate_case()) {
        return lesser_vertices(point, m, region).normalized;
    }
    // wide-precision (alpha < prevalence) and single-bound regions: clip route
    const double c = cost(point, m);
    const IsoLine iso = iso_line_from_cost(c, m);
    return std::clamp(clip_area_oracle(region, iso, true) / region.area, 0.0, 1.0);
}

template <typename Integrand>
double integrate_over_spec(const CostSpec& spec, Integrand&& value_at_t) {
    if (const auto* u = std::get_if<UniformT>(&spec.kind)) {
        const int n = std::max(spec.resolution, 2);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = u->lo + (u->hi - u->lo) * static_cast<double>(i) /
                                         static_cast<double>(n - 1);
            const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            sum += w * value_at_t(t);
        }
        return sum / static_cast<double>(n - 1);
    }
    const auto& r = std::get<CostRatioInterval>(spec.kind);
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> ratio_dist(r.lo, r.hi);
    double sum = 0.0;
    const long s = std::max(spec.samples, 1L);
    for (long i = 0; i < s; ++i) {
        sum += value_at_t(t_from_cost_ratio(ratio_dist(rng), r.profile).t);
    }
    return sum / static_cast<double>(s);
}

} // namespace

std::vector<OptimalRange> optimal_t_ranges(const HullCurve& hull, const FeasibleRegion& region) {
    if (hull.points.empty()) throw ConfigError("hull is empty");
    if (!is_feasible(hull.points.front(), region.profile, region.constraints)) {
        return {}; // no feasible hull point at all
    }
    std::size_t last = 0;
    while (last + 1 < hull.points.size() &&
           is_feasible(hull.points[last + 1], region.profile, region.constraints)) {
        ++last;
    }
    return ranges_for_prefix(hull, last);
}

std::vector<OptimalRange> optimal_t_ranges_unconstrained(const HullCurve& hull) {
    if (hull.points.empty()) throw ConfigError("hull is empty");
    return ranges_for_prefix(hull, hull.points.size() - 1);
}

HullCurve feasible_upper_hull(const RocCurve& curve, const FeasibleRegion& region) {
    RocCurve subset;
    if (curve.thresholds) subset.thresholds.emplace();
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        if (!is_feasible(curve.points[i], region.profile, region.constraints)) continue;
        subset.points.push_back(curve.points[i]);
        if (subset.thresholds) subset.thresholds->push_back((*curve.thresholds)[i]);
    }
    if (subset.points.empty()) return HullCurve{};
    return upper_hull(subset);
}

double best_normalized_area(const std::vector<OptimalRange>& ranges, const FeasibleRegion& region,
                            const CostModel& m) {
    if (ranges.empty()) return 0.0;
    return normalized_lesser_area(range_at(ranges, m.t).point, m, region);
}

PartialVorosResult partial_voros_detailed(const RocCurve& curve, const FeasibleRegion& region,
                                          const CostSpec& spec) {
    const bool two_bound_case =
        region.nondegenerate_case() || region.tag == RegionCase::Case3APentagon ||
        region.tag == RegionCase::Case3BTrapezoid;
    if (!(region.area > 0.0) || !two_bound_case) {
        throw ConfigError(std::string("partial volume requires a region bounded by both "
                                      "constraints with positive area, got ") +
                          to_string(region.tag));
    }
    spec.require_within_bound(region.profile, region.constraints.alpha);

    const HullCurve hull = feasible_upper_hull(curve, region);
    const std::vector<OptimalRange> ranges =
        hull.points.empty() ? std::vector<OptimalRange>{} : optimal_t_ranges(hull, region);

    PartialVorosResult result;
    result.feasible_hull_empty =
        ranges.empty() || (ranges.size() == 1 && ranges.front().point.fpr == 0.0 &&
                           ranges.front().point.tpr == 0.0);
    if (ranges.empty()) return result;

    result.value = integrate_over_spec(
        spec, [&](double t) { return best_normalized_area(ranges, region, CostModel(t)); });
    return result;
}

double partial_voros(const RocCurve& curve, const FeasibleRegion& region, const CostSpec& spec) {
    return partial_voros_detailed(curve, region, spec).value;
}

double voros_unconstrained(const RocCurve& curve, const CostSpec& spec) {
    const HullCurve hull = upper_hull(curve);
    const std::vector<OptimalRange> ranges = optimal_t_ranges_unconstrained(hull);
    return integrate_over_spec(spec, [&](double t) {
        const CostModel m(t);
        const RocPoint& best = range_at(ranges, t).point;
        return unit_square_area_below(iso_line_from_cost(cost(best, m), m));
    });
}

const PolicyEntry& ThresholdPolicy::entry_at(double t) const {
    if (entries.empty()) throw ConfigError("threshold policy is empty");
    auto it = std::lower_bound(entries.begin(), entries.end(), t,
                               [](const PolicyEntry& e, double v) { return e.t_high < v; });
    if (it == entries.end()) --it;
    return *it;
}

namespace {

ThresholdPolicy policy_from_ranges(const std::vector<OptimalRange>& ranges, const CostSpec& spec,
                                   std::string curve_id) {
    ThresholdPolicy policy;
    policy.curve_id = std::move(curve_id);
    const double lo = spec.t_low();
    const double hi = spec.t_high();
    for (const OptimalRange& r : ranges) {
        const double el = std::max(r.t_low, lo);
        const double eh = std::min(r.t_high, hi);
        if (eh > el) {
            policy.entries.push_back(PolicyEntry{el, eh, r.point, r.threshold});
        }
    }
    if (policy.entries.empty() && !ranges.empty()) {
        const OptimalRange& r = range_at(ranges, lo);
        policy.entries.push_back(PolicyEntry{lo, hi, r.point, r.threshold});
    }
    return policy;
}

} // namespace

ThresholdPolicy threshold_policy(const RocCurve& curve, const FeasibleRegion& region,
                                 const CostSpec& spec, std::string curve_id) {
    if (!curve.thresholds) {
        throw ConfigError("curve carries no binarization thresholds; evaluate with raw "
                          "points only or ingest score data");
    }
    spec.require_within_bound(region.profile, region.constraints.alpha);
    const HullCurve hull = feasible_upper_hull(curve, region);
    if (hull.points.empty()) return ThresholdPolicy{std::move(curve_id), {}};
    return policy_from_ranges(optimal_t_ranges(hull, region), spec, std::move(curve_id));
}

ThresholdPolicy threshold_policy_unconstrained(const RocCurve& curve, const CostSpec& spec,
                                               std::string curve_id) {
    if (!curve.thresholds) {
        throw ConfigError("curve carries no binarization thresholds; evaluate with raw "
                          "points only or ingest score data");
    }
    const HullCurve hull = upper_hull(curve);
    return policy_from_ranges(optimal_t_ranges_unconstrained(hull), spec, std::move(curve_id));
}

} // namespace pvoros
