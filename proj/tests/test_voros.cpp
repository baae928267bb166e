#include "pvoros/voros.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace pvoros;

namespace {

const DatasetProfile kProfile(1000, 9000);
const double kInf = std::numeric_limits<double>::infinity();

// y-value of the curve's polyline at x (points sorted by fpr)
double polyline_at(const RocCurve& curve, double x) {
    const auto& pts = curve.points;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (x <= pts[i].fpr) {
            const double dx = pts[i].fpr - pts[i - 1].fpr;
            if (dx == 0.0) return std::max(pts[i - 1].tpr, pts[i].tpr);
            const double u = (x - pts[i - 1].fpr) / dx;
            return pts[i - 1].tpr + u * (pts[i].tpr - pts[i - 1].tpr);
        }
    }
    return pts.back().tpr;
}

RocCurve random_curve(std::mt19937_64& rng, int interior) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<RocPoint> pts{{0, 0}, {1, 1}};
    for (int i = 0; i < interior; ++i) {
        const double x = unit(rng);
        // bias upward so curves look like real classifiers more often than not
        const double y = std::min(1.0, x + (1.0 - x) * unit(rng));
        pts.push_back(RocPoint{x, y});
    }
    return curve_from_points(std::move(pts));
}

const OptimalRange& range_containing(const std::vector<OptimalRange>& ranges, double t) {
    for (const OptimalRange& r : ranges) {
        if (t <= r.t_high) return r;
    }
    return ranges.back();
}

} // namespace

TEST_CASE("optimal ranges walk the hull breakpoints") {
    const RocCurve curve = curve_from_points({{0, 0}, {0.1, 0.6}, {0.4, 0.9}, {1, 1}});
    const HullCurve hull = upper_hull(curve);
    const auto ranges = optimal_t_ranges_unconstrained(hull);
    REQUIRE(ranges.size() == 4);
    CHECK(nearly_equal(ranges[0].point, RocPoint{1, 1}, 0));
    CHECK(ranges[0].t_low == 0.0);
    CHECK(ranges[0].t_high == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
    CHECK(nearly_equal(ranges[1].point, RocPoint{0.4, 0.9}, 0));
    CHECK(ranges[1].t_high == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(nearly_equal(ranges[2].point, RocPoint{0.1, 0.6}, 0));
    CHECK(ranges[2].t_high == doctest::Approx(6.0 / 7.0).epsilon(1e-15));
    CHECK(nearly_equal(ranges[3].point, RocPoint{0, 0}, 0));
    CHECK(ranges[3].t_high == 1.0);
}

TEST_CASE("optimal ranges on the trivial diagonal") {
    const auto ranges =
        optimal_t_ranges_unconstrained(upper_hull(curve_from_points({{0, 0}, {1, 1}})));
    REQUIRE(ranges.size() == 2);
    CHECK(nearly_equal(ranges[0].point, RocPoint{1, 1}, 0));
    CHECK(ranges[0].t_high == doctest::Approx(0.5));
    CHECK(nearly_equal(ranges[1].point, RocPoint{0, 0}, 0));
}

TEST_CASE("infeasible hull suffix hands its range to the last feasible point") {
    const RocCurve curve = curve_from_points({{0, 0}, {0.1, 0.6}, {0.4, 0.9}, {1, 1}});
    // kappa 5000 keeps (0.4,0.9) (load 4500) but drops (1,1)
    const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 5000));
    const auto ranges = optimal_t_ranges(upper_hull(curve), region);
    REQUIRE(ranges.size() == 3);
    CHECK(nearly_equal(ranges[0].point, RocPoint{0.4, 0.9}, 0));
    CHECK(ranges[0].t_low == 0.0);
    CHECK(ranges[0].t_high == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(nearly_equal(ranges[1].point, RocPoint{0.1, 0.6}, 0));
    CHECK(nearly_equal(ranges[2].point, RocPoint{0, 0}, 0));
}

TEST_CASE("partial volume of a diagonal curve is zero") {
    const RocCurve diag = curve_from_points({{0, 0}, {0.3, 0.3}, {0.7, 0.7}, {1, 1}});
    const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 3000));
    const PartialVorosResult res =
        partial_voros_detailed(diag, region, CostSpec::uniform_t(0.5, 0.6));
    CHECK(res.value == 0.0);
    CHECK(res.feasible_hull_empty); // only (0,0) survives the precision bound
}

TEST_CASE("topmost feasible y-axis point reaches full volume") {
    const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 900));
    const RocCurve curve = curve_from_points({{0, 0}, {0, 0.9}, {1, 1}});
    const double pv = partial_voros(curve, region, CostSpec::uniform_t(0.3, 0.5));
    CHECK(pv == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("single-operating-point volume: pinned oracle value") {
    const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 3000));
    const RocCurve curve = curve_from_points({{0, 0}, {0.1, 0.6}, {1, 1}});
    // frozen from a 10001-node trapezoid of the clipped normalized area
    const double pinned = 0.56153036105240461;
    CostSpec spec = CostSpec::uniform_t(0.5, 0.6);
    spec.resolution = 10001;
    CHECK(partial_voros(curve, region, spec) == doctest::Approx(pinned).epsilon(1e-12));
    spec.resolution = 1025;
    CHECK(partial_voros(curve, region, spec) == doctest::Approx(pinned).epsilon(1e-6));
}

TEST_CASE("volume evaluation rejects invalid configurations") {
    const RocCurve curve = curve_from_points({{0, 0}, {0.1, 0.6}, {1, 1}});
    const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 3000));
    // support beyond the never-alarm bound (~0.6136) must be rejected
    CHECK_THROWS_AS(partial_voros(curve, region, CostSpec::uniform_t(0.5, 0.7)), ConfigError);
    CHECK_THROWS_AS(CostSpec::uniform_t(0.6, 0.5), ConfigError);
    CHECK_THROWS_AS(CostSpec::cost_ratio(-1.0, 2.0, kProfile), ConfigError);
    // single-bound regions are out of scope for the partial volume
    const FeasibleRegion capacity_only = region_polygon(kProfile, Constraints(0.0, 3000));
    CHECK_THROWS_AS(partial_voros(curve, capacity_only, CostSpec::uniform_t(0.1, 0.2)),
                    ConfigError);
}

TEST_CASE("curves with no feasible point yield zero volume and an empty policy") {
    const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 3000));
    // hand-built curve that skips the usual (0,0)/(1,1) normalization
    RocCurve bare;
    bare.points = {RocPoint{0.9, 0.2}};
    bare.thresholds = std::vector<double>{0.5};
    const PartialVorosResult res =
        partial_voros_detailed(bare, region, CostSpec::uniform_t(0.5, 0.6));
    CHECK(res.value == 0.0);
    CHECK(res.feasible_hull_empty);
    const ThresholdPolicy policy =
        threshold_policy(bare, region, CostSpec::uniform_t(0.5, 0.6), "bare");
    CHECK(policy.empty());
}

TEST_CASE("unconstrained volume of reference curves") {
    const RocCurve perfect = curve_from_points({{0, 0}, {0, 1}, {1, 1}});
    CHECK(voros_unconstrained(perfect, CostSpec::uniform_t(0.2, 0.8)) == doctest::Approx(1.0));

    // trivial endpoints only: best of the two corners at each t, via quadrature
    const RocCurve trivial = curve_from_points({{0, 0}, {1, 1}});
    const CostSpec spec = CostSpec::uniform_t(0.4, 0.6);
    const int n = 20001;
    double expected = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = 0.4 + 0.2 * i / (n - 1);
        const CostModel m(t);
        const RocPoint best = t < 0.5 ? RocPoint{1, 1} : RocPoint{0, 0};
        expected +=
            ((i == 0 || i == n - 1) ? 0.5 : 1.0) * unit_square_area_below(iso_line(best, m));
    }
    expected /= (n - 1);
    const double v = voros_unconstrained(trivial, spec);
    CHECK(v == doctest::Approx(expected).epsilon(1e-5));
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
}

TEST_CASE("threshold policy maps ranges back to score cutoffs") {
    SUBCASE("single dominant feasible point") {
        const RocCurve curve =
            curve_from_points({{0, 0}, {0.1, 0.6}, {1, 1}}, std::vector<double>{kInf, 0.7, -kInf});
        const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 3000));
        const ThresholdPolicy policy =
            threshold_policy(curve, region, CostSpec::uniform_t(0.5, 0.6), "m");
        REQUIRE(policy.entries.size() == 1);
        CHECK(policy.entries[0].t_low == doctest::Approx(0.5));
        CHECK(policy.entries[0].t_high == doctest::Approx(0.6));
        CHECK(*policy.entries[0].threshold == 0.7);
    }
    SUBCASE("two entries split at the breakpoint") {
        const RocCurve curve = curve_from_points({{0, 0}, {0.1, 0.6}, {0.4, 0.9}, {1, 1}},
                                                 std::vector<double>{kInf, 0.8, 0.5, -kInf});
        const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 5000));
        const ThresholdPolicy policy =
            threshold_policy(curve, region, CostSpec::uniform_t(0.4, 0.6), "m");
        REQUIRE(policy.entries.size() == 2);
        CHECK(policy.entries[0].t_low == doctest::Approx(0.4));
        CHECK(policy.entries[0].t_high == doctest::Approx(0.5));
        CHECK(*policy.entries[0].threshold == 0.5);
        CHECK(policy.entries[1].t_high == doctest::Approx(0.6));
        CHECK(*policy.entries[1].threshold == 0.8);
    }
    SUBCASE("missing provenance is an error") {
        const RocCurve curve = curve_from_points({{0, 0}, {0.1, 0.6}, {1, 1}});
        const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 3000));
        CHECK_THROWS_AS(threshold_policy(curve, region, CostSpec::uniform_t(0.5, 0.6)),
                        ConfigError);
    }
}

TEST_CASE("dominating curves never rank lower") {
    std::mt19937_64 rng(20240610);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int checked = 0;
    while (checked < 500) {
        const auto [profile, cons] = oracle::random_region(rng);
        const FeasibleRegion region = region_polygon(profile, cons);
        if (!region.nondegenerate_case()) continue;

        const RocCurve lower = random_curve(rng, 6);
        // superset construction: add points on/above the lower polyline so the
        // upper curve dominates pointwise as a function
        std::vector<RocPoint> pts = lower.points;
        for (int i = 0; i < 3; ++i) {
            const double x = unit(rng);
            const double base = polyline_at(lower, x);
            pts.push_back(RocPoint{x, std::min(1.0, base + (1.0 - base) * unit(rng))});
        }
        const RocCurve upper = curve_from_points(std::move(pts));

        const double bound = never_alarm_t_bound(profile, cons.alpha);
        CostSpec spec = CostSpec::uniform_t(0.2 * bound, 0.8 * bound);
        spec.resolution = 129;
        const double pv_upper = partial_voros(upper, region, spec);
        const double pv_lower = partial_voros(lower, region, spec);
        REQUIRE(pv_upper >= pv_lower);
        REQUIRE(voros_unconstrained(upper, spec) >= voros_unconstrained(lower, spec));
        ++checked;
    }
}

TEST_CASE("volume converges in quadrature resolution") {
    std::mt19937_64 rng(13579);
    int checked = 0;
    while (checked < 100) {
        const auto [profile, cons] = oracle::random_region(rng);
        const FeasibleRegion region = region_polygon(profile, cons);
        if (!region.nondegenerate_case()) continue;
        const RocCurve curve = random_curve(rng, 6);
        const double bound = never_alarm_t_bound(profile, cons.alpha);
        CostSpec coarse = CostSpec::uniform_t(0.1 * bound, 0.9 * bound);
        coarse.resolution = 1025;
        CostSpec fine = coarse;
        fine.resolution = 10001;
        const double a = partial_voros(curve, region, coarse);
        const double b = partial_voros(curve, region, fine);
        REQUIRE(std::fabs(a - b) < 1e-5);
        ++checked;
    }
}

TEST_CASE("ratio sampling agrees with matched ratio-space quadrature") {
    const FeasibleRegion region = region_polygon(kProfile, Constraints(0.15, 5000));
    const RocCurve curve =
        curve_from_points({{0, 0}, {0.02, 0.35}, {0.1, 0.6}, {0.25, 0.8}, {1, 1}});
    CostSpec spec = CostSpec::cost_ratio(1.0 / 9.0, 1.0 / 6.0, kProfile);
    spec.samples = 100000;
    spec.seed = 42;
    const double mc = partial_voros(curve, region, spec);

    // quadrature over the ratio variable (uniform there by construction)
    const auto ranges = optimal_t_ranges(feasible_upper_hull(curve, region), region);
    const int n = 20001;
    const double lo = 1.0 / 9.0, hi = 1.0 / 6.0;
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = lo + (hi - lo) * i / (n - 1);
        const CostModel m = t_from_cost_ratio(r, kProfile);
        mean += ((i == 0 || i == n - 1) ? 0.5 : 1.0) * best_normalized_area(ranges, region, m);
    }
    mean /= (n - 1);
    double var = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = lo + (hi - lo) * i / (n - 1);
        const CostModel m = t_from_cost_ratio(r, kProfile);
        const double d = best_normalized_area(ranges, region, m) - mean;
        var += ((i == 0 || i == n - 1) ? 0.5 : 1.0) * d * d;
    }
    var /= (n - 1);
    const double se = std::sqrt(var / static_cast<double>(spec.samples));
    CHECK(std::fabs(mc - mean) <= 3.0 * se + 1e-9);
}

TEST_CASE("per-node choice is cost-minimal among feasible curve points") {
    std::mt19937_64 rng(8642);
    int checked = 0;
    while (checked < 50) {
        const auto [profile, cons] = oracle::random_region(rng);
        const FeasibleRegion region = region_polygon(profile, cons);
        if (!region.nondegenerate_case()) continue;
        const RocCurve curve = random_curve(rng, 8);
        const auto ranges = optimal_t_ranges(feasible_upper_hull(curve, region), region);
        const double bound = never_alarm_t_bound(profile, cons.alpha);
        for (int i = 0; i <= 200; ++i) {
            const double t = bound * (0.005 + 0.99 * i / 200.0);
            const CostModel m(t);
            const RocPoint chosen = range_containing(ranges, t).point;
            double best = 1e300;
            for (const RocPoint& p : curve.points) {
                if (is_feasible(p, profile, cons)) best = std::min(best, cost(p, m));
            }
            REQUIRE(cost(chosen, m) <= best + 1e-12);
        }
        ++checked;
    }
}

TEST_CASE("adding dominated points leaves the volume bit-identical") {
    std::mt19937_64 rng(11223344);
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    int checked = 0;
    while (checked < 50) {
        const auto [profile, cons] = oracle::random_region(rng);
        const FeasibleRegion region = region_polygon(profile, cons);
        if (!region.nondegenerate_case()) continue;
        const RocCurve base = random_curve(rng, 5);
        const HullCurve hull = upper_hull(base);

        std::vector<RocPoint> pts = base.points;
        for (std::size_t i = 1; i < hull.points.size(); ++i) {
            // midpoints of hull segments nudged down stay strictly inside
            const double mx = (hull.points[i - 1].fpr + hull.points[i].fpr) / 2;
            const double my = (hull.points[i - 1].tpr + hull.points[i].tpr) / 2;
            pts.push_back(RocPoint{mx, my * unit(rng)});
        }
        const RocCurve padded = curve_from_points(std::move(pts));

        const double bound = never_alarm_t_bound(profile, cons.alpha);
        CostSpec spec = CostSpec::uniform_t(0.1 * bound, 0.9 * bound);
        spec.resolution = 257;
        const double pv_base = partial_voros(base, region, spec);
        const double pv_padded = partial_voros(padded, region, spec);
        // extra points can only help (superset), and when they leave the
        // optimization hull untouched the volume is identical bit for bit
        REQUIRE(pv_padded >= pv_base);
        const HullCurve eval_base = feasible_upper_hull(base, region);
        const HullCurve eval_padded = feasible_upper_hull(padded, region);
        if (oracle::same_points(eval_base.points, eval_padded.points)) {
            REQUIRE(pv_base == pv_padded);
        }
        ++checked;
    }
}
