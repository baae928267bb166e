#pragma once

#include "pvoros/selection.hpp"

#include <cstdint>

namespace pvoros {

// Two-Gaussian score model: positives ~ N(mu_pos, sigma_pos), negatives ~
// N(mu_neg, sigma_neg).
struct SynthSpec {
    double mu_pos{1.0};
    double sigma_pos{1.0};
    double mu_neg{0.0};
    double sigma_neg{1.0};
    long n_pos{1};
    long n_neg{1};
    std::uint64_t seed{0};
};

// Seeded, reproducible score set in scores format order (positives first).
ScoreSet synth_generate(const SynthSpec& spec);

// Closed-form AUROC of the score model: Phi((mu_pos-mu_neg)/sqrt(s0^2+s1^2)).
double binormal_auroc(const SynthSpec& spec);

} // namespace pvoros
