#include "pvoros/cost_spec.hpp"

#include "pvoros/cost.hpp"
#include "pvoros/errors.hpp"

#include <cmath>
#include <string>

namespace pvoros {

CostSpec CostSpec::uniform_t(double lo, double hi) {
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
        throw ConfigError("uniform t interval requires 0 <= lo < hi <= 1, got [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    CostSpec spec;
    spec.kind = UniformT{lo, hi};
    return spec;
}

CostSpec CostSpec::cost_ratio(double lo, double hi, const DatasetProfile& profile) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo < hi)) {
        throw ConfigError("cost ratio interval requires 0 < lo < hi, got [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
    }
    CostSpec spec;
    spec.kind = CostRatioInterval{lo, hi, profile};
    return spec;
}

double CostSpec::t_low() const {
    if (const auto* u = std::get_if<UniformT>(&kind)) return u->lo;
    const auto& r = std::get<CostRatioInterval>(kind);
    return t_from_cost_ratio(r.lo, r.profile).t;
}

double CostSpec::t_high() const {
    if (const auto* u = std::get_if<UniformT>(&kind)) return u->hi;
    const auto& r = std::get<CostRatioInterval>(kind);
    return t_from_cost_ratio(r.hi, r.profile).t;
}

void CostSpec::require_within_bound(const DatasetProfile& profile, double alpha) const {
    const double bound = never_alarm_t_bound(profile, alpha);
    const double hi = t_high();
    if (hi > bound + 1e-12) {
        throw ConfigError("cost parameter support reaches t = " + std::to_string(hi) +
                          ", beyond the largest t at which never-alarm stays cost-maximal "
                          "for alpha = " +
                          std::to_string(alpha) + " (bound " + std::to_string(bound) + ")");
    }
}

} // namespace pvoros
