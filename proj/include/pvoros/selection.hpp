#pragma once

#include "pvoros/voros.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pvoros {

struct ScoreSet {
    std::vector<std::string> ids;
    std::vector<double> scores;
    std::vector<int> labels;
};

struct Candidate {
    std::string name;
    RocCurve validation;
    std::optional<ScoreSet> test;
};

// Named candidates, kept sorted by name (ties in every selection break
// toward the lexicographically first name).
struct CandidateSet {
    std::vector<Candidate> candidates;

    void add(Candidate c); // throws ConfigError on duplicate names
    const Candidate* find(const std::string& name) const;
};

enum class Strategy { MaxPV, MaxVOROS, MaxFeasibleRecall, MaxFeasiblePAUROC };

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);

// Max tpr over feasible curve points (0 when only (0,0) qualifies).
double feasible_recall(const RocCurve& curve, const FeasibleRegion& region);

// Trapezoidal area under the polyline of feasible curve points, anchored at
// (0,0), over their fpr span. Reduces to AUROC when everything is feasible.
double feasible_pauroc(const RocCurve& curve, const FeasibleRegion& region);

struct SelectionReport {
    Strategy strategy{Strategy::MaxPV};
    std::string winner;
    double metric{0.0};
    ThresholdPolicy policy;
    bool policy_available{false};
    bool no_feasible_candidate{false};
    std::optional<double> expected_test_cost;
    std::optional<std::uint64_t> mc_seed;
    std::optional<long> mc_samples;
};

// Winner maximizes the strategy's scalar on validation curves; the policy is
// per-t optimal for the t-aware strategies and constant for the t-unaware
// ones (argmax-recall threshold, resp. the feasible point closest to (0,1)).
SelectionReport select_model(const CandidateSet& candidates, Strategy strategy,
                             const FeasibleRegion& region, const CostSpec& spec);

// Deployment-style evaluation: binarize test scores at tau(t) and average
// the normalized cost of the realized (fpr, tpr) over the cost spec.
double expected_test_cost(const ThresholdPolicy& policy, const ScoreSet& test,
                          const CostSpec& spec);

struct HeatmapCell {
    double alpha{0.0};
    double kappa{0.0};      // absolute count
    double kappa_frac{0.0}; // kappa / |D|
    bool invalid{false};    // assumptions or t bound violated at this cell
    bool tie{false};
    std::string winner; // candidate name, "tie", or "invalid"
    std::vector<double> pv; // per candidate, in candidate-set order
};

struct HeatmapGrid {
    std::vector<double> alphas;
    std::vector<double> kappa_fracs;
    std::vector<std::string> candidate_names;
    double epsilon{0.01};
    std::vector<HeatmapCell> cells; // row-major: alpha outer, kappa inner

    const HeatmapCell& at(std::size_t ai, std::size_t ki) const;
};

// Per-cell partial volume comparison over an (alpha, kappa) grid. kappa axis
// is given as fractions of |D|. A cell is "tie" when the top two values
// differ by <= epsilon. threads > 1 evaluates cells in parallel
// (deterministic: every cell derives its RNG from spec.seed).
HeatmapGrid win_heatmap(const CandidateSet& candidates, const DatasetProfile& profile,
                        std::span<const double> alphas, std::span<const double> kappa_fracs,
                        const CostSpec& spec, double epsilon = 0.01, int threads = 1);

} // namespace pvoros
