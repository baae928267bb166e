#include "pvoros/synth.hpp"

#include "pvoros/errors.hpp"

#include <cmath>
#include <random>
#include <string>

namespace pvoros {

ScoreSet synth_generate(const SynthSpec& spec) {
    if (spec.n_pos < 1 || spec.n_neg < 1) {
        throw ConfigError("synthetic generator needs at least one example per class");
    }
    if (!(spec.sigma_pos > 0.0) || !(spec.sigma_neg > 0.0)) {
        throw ConfigError("score standard deviations must be positive");
    }
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> pos_dist(spec.mu_pos, spec.sigma_pos);
    std::normal_distribution<double> neg_dist(spec.mu_neg, spec.sigma_neg);

    ScoreSet set;
    set.ids.reserve(static_cast<std::size_t>(spec.n_pos + spec.n_neg));
    for (long i = 0; i < spec.n_pos; ++i) {
        set.ids.push_back("p" + std::to_string(i));
        set.scores.push_back(pos_dist(rng));
        set.labels.push_back(1);
    }
    for (long i = 0; i < spec.n_neg; ++i) {
        set.ids.push_back("n" + std::to_string(i));
        set.scores.push_back(neg_dist(rng));
        set.labels.push_back(0);
    }
    return set;
}

double binormal_auroc(const SynthSpec& spec) {
    const double d = (spec.mu_pos - spec.mu_neg) /
                     std::sqrt(spec.sigma_pos * spec.sigma_pos + spec.sigma_neg * spec.sigma_neg);
    return 0.5 * std::erfc(-d / std::sqrt(2.0));
}

} // namespace pvoros
