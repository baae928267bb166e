#include "pvoros/cost.hpp"

#include "pvoros/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace pvoros {

CostModel::CostModel(double t_value) : t(t_value) {
    if (!(t_value >= 0.0 && t_value <= 1.0)) {
        throw ConfigError("cost parameter t must lie in [0,1], got " + std::to_string(t_value));
    }
}

double cost(const RocPoint& p, const CostModel& m) {
    return m.t * p.fpr + (1.0 - m.t) * (1.0 - p.tpr);
}

CostModel t_from_cost_ratio(double ratio, const DatasetProfile& profile) {
    if (!(std::isfinite(ratio) && ratio > 0.0)) {
        throw ConfigError("cost ratio C0/C1 must be finite and positive, got " +
                          std::to_string(ratio));
    }
    const double weighted_neg = ratio * static_cast<double>(profile.n_neg);
    return CostModel(weighted_neg / (weighted_neg + static_cast<double>(profile.n_pos)));
}

double cost_ratio_from_t(const CostModel& m, const DatasetProfile& profile) {
    return m.t * static_cast<double>(profile.n_pos) /
           ((1.0 - m.t) * static_cast<double>(profile.n_neg));
}

double IsoLine::slope() const {
    if (t >= 1.0) return std::numeric_limits<double>::infinity();
    return t / (1.0 - t);
}

IsoLine iso_line(const RocPoint& anchor, const CostModel& m) {
    // t*x - (1-t)*y = t*h - (1-t)*k; eval(q) = cost(q) - cost(anchor).
    const double t = m.t;
    return IsoLine{Line{t, -(1.0 - t), t * anchor.fpr - (1.0 - t) * anchor.tpr}, anchor, t};
}

IsoLine iso_line_from_cost(double cost_value, const CostModel& m) {
    const double t = m.t;
    RocPoint anchor;
    if (t >= 1.0) {
        anchor = RocPoint{cost_value, 1.0}; // cost = fpr when t = 1
    } else {
        anchor = RocPoint{0.0, 1.0 - cost_value / (1.0 - t)};
    }
    return iso_line(anchor, m);
}

} // namespace pvoros
