#pragma once

#include "pvoros/cost_spec.hpp"
#include "pvoros/partial_area.hpp"
#include "pvoros/roc_curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pvoros {

// A hull point together with the t interval on which it has minimal cost.
struct OptimalRange {
    RocPoint point;
    double t_low{0.0};
    double t_high{1.0};
    std::optional<double> threshold;
};

// Walk the hull's feasible prefix; each segment contributes the breakpoint
// t = dy/(dx+dy). Ranges are returned in ascending t and partition [0,1].
// Empty only if no hull point is feasible (cannot happen for curves built
// with (0,0) present).
std::vector<OptimalRange> optimal_t_ranges(const HullCurve& hull, const FeasibleRegion& region);

// Same walk with every point treated as feasible (full-square evaluation).
std::vector<OptimalRange> optimal_t_ranges_unconstrained(const HullCurve& hull);

// Upper hull of the curve's feasible points. This, not the full hull, is the
// right search set for per-t optimization: when the feasibility boundary cuts
// a hull edge, a feasible curve point below the full hull can beat the last
// feasible hull vertex.
HullCurve feasible_upper_hull(const RocCurve& curve, const FeasibleRegion& region);

// Normalized lesser area of the optimal feasible point at t (the per-node
// integrand of the partial volume).
double best_normalized_area(const std::vector<OptimalRange>& ranges, const FeasibleRegion& region,
                            const CostModel& m);

struct PartialVorosResult {
    double value{0.0};
    bool feasible_hull_empty{false}; // only (0,0) feasible: value is 0
};

// Density-weighted mean over t of the best normalized partial area:
// composite trapezoid for UniformT, seeded sample mean for CostRatio.
// Throws ConfigError for degenerate regions or t support beyond the
// never-alarm bound.
PartialVorosResult partial_voros_detailed(const RocCurve& curve, const FeasibleRegion& region,
                                          const CostSpec& spec);
double partial_voros(const RocCurve& curve, const FeasibleRegion& region, const CostSpec& spec);

// Same pipeline over the full unit square (area 1, every point feasible).
double voros_unconstrained(const RocCurve& curve, const CostSpec& spec);

struct PolicyEntry {
    double t_low{0.0};
    double t_high{1.0};
    RocPoint point;
    std::optional<double> threshold;
};

// Piecewise-constant map t -> binarization threshold.
struct ThresholdPolicy {
    std::string curve_id;
    std::vector<PolicyEntry> entries; // ascending, covering the spec support

    bool empty() const { return entries.empty(); }
    const PolicyEntry& entry_at(double t) const;
};

// Optimal ranges mapped back to originating thresholds and intersected with
// the spec support. Throws ConfigError when the curve lacks thresholds.
ThresholdPolicy threshold_policy(const RocCurve& curve, const FeasibleRegion& region,
                                 const CostSpec& spec, std::string curve_id = {});
ThresholdPolicy threshold_policy_unconstrained(const RocCurve& curve, const CostSpec& spec,
                                               std::string curve_id = {});

} // namespace pvoros
