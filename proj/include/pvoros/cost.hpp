#pragma once

#include "pvoros/dataset.hpp"
#include "pvoros/geometry.hpp"

namespace pvoros {

// Fractional cost parameter: the share of total misclassification cost
// attributable to false positives.
struct CostModel {
    double t{0.5};
    explicit CostModel(double t_value);
};

// Normalized cost of an ROC point: t*fpr + (1-t)*(1-tpr). 0 at (0,1), 1 at (1,0).
double cost(const RocPoint& p, const CostModel& m);

// t = ratio*|N| / (ratio*|N| + |P|) for ratio = C0/C1 > 0.
CostModel t_from_cost_ratio(double ratio, const DatasetProfile& profile);

// Inverse map: ratio = t*|P| / ((1-t)*|N|).
double cost_ratio_from_t(const CostModel& m, const DatasetProfile& profile);

// Equal-cost line through an anchor point at a fixed t. Stored implicitly as
// t*x - (1-t)*y = t*h - (1-t)*k so that t = 1 (vertical) needs no special
// casing; eval() of the implicit form equals cost(q) - cost(anchor).
struct IsoLine {
    Line line;
    RocPoint anchor;
    double t{0.5};

    // t/(1-t); +inf at t = 1.
    double slope() const;
    double cost_delta(const RocPoint& q) const { return line.eval(q); }
};

IsoLine iso_line(const RocPoint& anchor, const CostModel& m);

// Iso line pinned by cost value alone. The anchor is the y-axis point with
// that cost (or (c, 1) when t = 1), so the construction depends only on
// (cost, t) and equal-cost inputs produce bit-identical lines.
IsoLine iso_line_from_cost(double cost_value, const CostModel& m);

} // namespace pvoros
