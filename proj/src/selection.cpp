#include "pvoros/selection.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>

namespace pvoros {

void CandidateSet::add(Candidate c) {
    if (c.name.empty() || c.name.find_first_of(",\"\n\r") != std::string::npos) {
        throw ConfigError("candidate name must be nonempty and free of commas, quotes and "
                          "newlines: '" +
                          c.name + "'");
    }
    auto it = std::lower_bound(candidates.begin(), candidates.end(), c.name,
                               [](const Candidate& a, const std::string& n) { return a.name < n; });
    if (it != candidates.end() && it->name == c.name) {
        throw ConfigError("duplicate candidate name: " + c.name);
    }
    candidates.insert(it, std::move(c));
}

const Candidate* CandidateSet::find(const std::string& name) const {
    for (const Candidate& c : candidates) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const char* to_string(Strategy s) {
    switch (s) {
    case Strategy::MaxPV: return "max_pv";
    case Strategy::MaxVOROS: return "max_voros";
    case Strategy::MaxFeasibleRecall: return "max_feasible_recall";
    case Strategy::MaxFeasiblePAUROC: return "max_feasible_pauroc";
    }
    return "unknown";
}

Strategy strategy_from_string(const std::string& name) {
    if (name == "max_pv") return Strategy::MaxPV;
    if (name == "max_voros") return Strategy::MaxVOROS;
    if (name == "max_feasible_recall") return Strategy::MaxFeasibleRecall;
    if (name == "max_feasible_pauroc") return Strategy::MaxFeasiblePAUROC;
    throw ConfigError("unknown selection strategy: " + name +
                      " (expected max_pv, max_voros, max_feasible_recall or "
                      "max_feasible_pauroc)");
}

double feasible_recall(const RocCurve& curve, const FeasibleRegion& region) {
    double best = 0.0;
    for (const RocPoint& p : curve.points) {
        if (is_feasible(p, region.profile, region.constraints)) best = std::max(best, p.tpr);
    }
    return best;
}

double feasible_pauroc(const RocCurve& curve, const FeasibleRegion& region) {
    std::vector<RocPoint> feas;
    for (const RocPoint& p : curve.points) {
        if (is_feasible(p, region.profile, region.constraints)) feas.push_back(p);
    }
    double area = 0.0;
    for (std::size_t i = 1; i < feas.size(); ++i) {
        area += (feas[i].fpr - feas[i - 1].fpr) * (feas[i].tpr + feas[i - 1].tpr) / 2.0;
    }
    return area;
}

namespace {

// index of the feasible point with maximal recall (smallest fpr on ties)
std::optional<std::size_t> argmax_recall_index(const RocCurve& curve,
                                               const FeasibleRegion& region) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const RocPoint& p = curve.points[i];
        if (!is_feasible(p, region.profile, region.constraints)) continue;
        if (!best || p.tpr > curve.points[*best].tpr ||
            (p.tpr == curve.points[*best].tpr && p.fpr < curve.points[*best].fpr)) {
            best = i;
        }
    }
    return best;
}

// feasible point nearest to the perfect corner (0,1)
std::optional<std::size_t> knee_index(const RocCurve& curve, const FeasibleRegion& region) {
    std::optional<std::size_t> best;
    double best_d2 = 0.0;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const RocPoint& p = curve.points[i];
        if (!is_feasible(p, region.profile, region.constraints)) continue;
        const double d2 = p.fpr * p.fpr + (1.0 - p.tpr) * (1.0 - p.tpr);
        if (!best || d2 < best_d2) {
            best = i;
            best_d2 = d2;
        }
    }
    return best;
}

ThresholdPolicy constant_policy(const RocCurve& curve, std::size_t point_index,
                                const CostSpec& spec, std::string curve_id) {
    ThresholdPolicy policy;
    policy.curve_id = std::move(curve_id);
    std::optional<double> thr;
    if (curve.thresholds) thr = (*curve.thresholds)[point_index];
    policy.entries.push_back(
        PolicyEntry{spec.t_low(), spec.t_high(), curve.points[point_index], thr});
    return policy;
}

bool policy_has_thresholds(const ThresholdPolicy& policy) {
    if (policy.entries.empty()) return false;
    for (const PolicyEntry& e : policy.entries) {
        if (!e.threshold) return false;
    }
    return true;
}

struct BinarizedPoint {
    double fpr;
    double tpr;
};

BinarizedPoint binarize(const ScoreSet& test, double threshold, long long n_pos,
                        long long n_neg) {
    long long tp = 0, fp = 0;
    for (std::size_t i = 0; i < test.scores.size(); ++i) {
        if (test.scores[i] >= threshold) {
            if (test.labels[i] == 1) {
                ++tp;
            } else {
                ++fp;
            }
        }
    }
    return BinarizedPoint{static_cast<double>(fp) / static_cast<double>(n_neg),
                          static_cast<double>(tp) / static_cast<double>(n_pos)};
}

} // namespace

SelectionReport select_model(const CandidateSet& candidates, Strategy strategy,
                             const FeasibleRegion& region, const CostSpec& spec) {
    if (candidates.candidates.empty()) throw ConfigError("selection requires >= 1 candidate");

    std::vector<double> metric(candidates.candidates.size(), 0.0);
    for (std::size_t i = 0; i < candidates.candidates.size(); ++i) {
        const RocCurve& curve = candidates.candidates[i].validation;
        switch (strategy) {
        case Strategy::MaxPV: metric[i] = partial_voros(curve, region, spec); break;
        case Strategy::MaxVOROS: metric[i] = voros_unconstrained(curve, spec); break;
        case Strategy::MaxFeasibleRecall: metric[i] = feasible_recall(curve, region); break;
        case Strategy::MaxFeasiblePAUROC: metric[i] = feasible_pauroc(curve, region); break;
        }
    }

    std::size_t win = 0; // candidates sorted by name, so first max wins ties
    for (std::size_t i = 1; i < metric.size(); ++i) {
        if (metric[i] > metric[win]) win = i;
    }
    const Candidate& winner = candidates.candidates[win];

    SelectionReport report;
    report.strategy = strategy;
    report.winner = winner.name;
    report.metric = metric[win];
    if (strategy == Strategy::MaxPV) {
        report.no_feasible_candidate =
            std::all_of(metric.begin(), metric.end(), [](double v) { return v == 0.0; });
    }

    switch (strategy) {
    case Strategy::MaxPV:
        if (winner.validation.thresholds) {
            report.policy = threshold_policy(winner.validation, region, spec, winner.name);
        }
        break;
    case Strategy::MaxVOROS:
        if (winner.validation.thresholds) {
            report.policy = threshold_policy_unconstrained(winner.validation, spec, winner.name);
        }
        break;
    case Strategy::MaxFeasibleRecall: {
        auto idx = argmax_recall_index(winner.validation, region);
        if (idx) report.policy = constant_policy(winner.validation, *idx, spec, winner.name);
        break;
    }
    case Strategy::MaxFeasiblePAUROC: {
        auto idx = knee_index(winner.validation, region);
        if (idx) report.policy = constant_policy(winner.validation, *idx, spec, winner.name);
        break;
    }
    }
    report.policy_available = policy_has_thresholds(report.policy);

    if (report.policy_available && winner.test) {
        report.expected_test_cost = expected_test_cost(report.policy, *winner.test, spec);
        if (spec.is_ratio()) {
            report.mc_seed = spec.seed;
            report.mc_samples = spec.samples;
        }
    }
    return report;
}

double expected_test_cost(const ThresholdPolicy& policy, const ScoreSet& test,
                          const CostSpec& spec) {
    if (policy.empty()) throw ConfigError("cannot evaluate an empty threshold policy");
    if (test.scores.size() != test.labels.size() || test.scores.empty()) {
        throw DataError("test score set is empty or inconsistent");
    }
    long long n_pos = 0, n_neg = 0;
    for (int lab : test.labels) {
        if (lab == 1) {
            ++n_pos;
        } else if (lab == 0) {
            ++n_neg;
        } else {
            throw DataError("test labels must be 0 or 1");
        }
    }
    if (n_pos == 0 || n_neg == 0) {
        throw DataError("test labels must contain both classes");
    }

    std::vector<BinarizedPoint> per_entry;
    per_entry.reserve(policy.entries.size());
    for (const PolicyEntry& e : policy.entries) {
        if (!e.threshold) {
            throw ConfigError("policy entry lacks a binarization threshold");
        }
        per_entry.push_back(binarize(test, *e.threshold, n_pos, n_neg));
    }

    if (const auto* u = std::get_if<UniformT>(&spec.kind)) {
        // cost is affine in t on each entry: integrate each piece exactly
        double total = 0.0;
        for (std::size_t i = 0; i < policy.entries.size(); ++i) {
            const double lo = std::max(policy.entries[i].t_low, u->lo);
            const double hi = std::min(policy.entries[i].t_high, u->hi);
            if (hi <= lo) continue;
            const double dt = hi - lo;
            const double dt2 = (hi * hi - lo * lo) / 2.0;
            total += per_entry[i].fpr * dt2 + (1.0 - per_entry[i].tpr) * (dt - dt2);
        }
        return total / (u->hi - u->lo);
    }

    const auto& r = std::get<CostRatioInterval>(spec.kind);
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> ratio_dist(r.lo, r.hi);
    double sum = 0.0;
    const long s = std::max(spec.samples, 1L);
    for (long i = 0; i < s; ++i) {
        const double t = t_from_cost_ratio(ratio_dist(rng), r.profile).t;
        // entry lookup by t; entries ascend and cover the support
        std::size_t idx = 0;
        while (idx + 1 < policy.entries.size() && policy.entries[idx].t_high < t) ++idx;
        sum += t * per_entry[idx].fpr + (1.0 - t) * (1.0 - per_entry[idx].tpr);
    }
    return sum / static_cast<double>(s);
}

const HeatmapCell& HeatmapGrid::at(std::size_t ai, std::size_t ki) const {
    return cells[ai * kappa_fracs.size() + ki];
}

HeatmapGrid win_heatmap(const CandidateSet& candidates, const DatasetProfile& profile,
                        std::span<const double> alphas, std::span<const double> kappa_fracs,
                        const CostSpec& spec, double epsilon, int threads) {
    if (candidates.candidates.size() < 2) {
        throw ConfigError("win heatmap requires >= 2 candidates");
    }
    HeatmapGrid grid;
    grid.alphas.assign(alphas.begin(), alphas.end());
    grid.kappa_fracs.assign(kappa_fracs.begin(), kappa_fracs.end());
    for (const Candidate& c : candidates.candidates) grid.candidate_names.push_back(c.name);
    grid.epsilon = epsilon;
    grid.cells.resize(grid.alphas.size() * grid.kappa_fracs.size());

    auto eval_cell = [&](std::size_t ai, std::size_t ki) {
        HeatmapCell cell;
        cell.alpha = grid.alphas[ai];
        cell.kappa_frac = grid.kappa_fracs[ki];
        cell.kappa = cell.kappa_frac * profile.total();
        cell.pv.assign(candidates.candidates.size(), 0.0);

        const Constraints cons(cell.alpha, cell.kappa);
        const double bound = never_alarm_t_bound(profile, cell.alpha);
        if (!practical_assumptions_hold(profile, cons) || spec.t_high() > bound + 1e-12) {
            cell.invalid = true;
            cell.winner = "invalid";
            return cell;
        }
        const FeasibleRegion region = region_polygon(profile, cons);
        for (std::size_t i = 0; i < candidates.candidates.size(); ++i) {
            cell.pv[i] = partial_voros(candidates.candidates[i].validation, region, spec);
        }
        std::size_t top = 0, second = cell.pv.size(); // second-best index
        for (std::size_t i = 1; i < cell.pv.size(); ++i) {
            if (cell.pv[i] > cell.pv[top]) {
                second = top;
                top = i;
            } else if (second == cell.pv.size() || cell.pv[i] > cell.pv[second]) {
                second = i;
            }
        }
        if (second < cell.pv.size() && cell.pv[top] - cell.pv[second] <= epsilon) {
            cell.tie = true;
            cell.winner = "tie";
        } else {
            cell.winner = grid.candidate_names[top];
        }
        return cell;
    };

    const std::size_t total = grid.cells.size();
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));
    if (workers == 1) {
        for (std::size_t idx = 0; idx < total; ++idx) {
            grid.cells[idx] = eval_cell(idx / grid.kappa_fracs.size(), idx % grid.kappa_fracs.size());
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (std::size_t idx = static_cast<std::size_t>(w); idx < total;
                     idx += static_cast<std::size_t>(workers)) {
                    grid.cells[idx] =
                        eval_cell(idx / grid.kappa_fracs.size(), idx % grid.kappa_fracs.size());
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }
    return grid;
}

} // namespace pvoros
