#pragma once

#include <cstdint>

namespace pvoros {

// Class counts of the evaluation dataset. All count-dependent geometry
// (precision slope, capacity line, cost-ratio mapping) hangs off this.
struct DatasetProfile {
    long long n_pos{1};
    long long n_neg{1};

    DatasetProfile(long long pos, long long neg);

    double total() const { return static_cast<double>(n_pos) + static_cast<double>(n_neg); }
    double prevalence() const { return static_cast<double>(n_pos) / total(); }

    // Negatives strictly outnumber positives; consumers that rely on the
    // imbalanced regime check this lazily.
    bool negatives_dominant() const { return n_pos < n_neg; }

    bool operator==(const DatasetProfile&) const = default;
};

} // namespace pvoros
