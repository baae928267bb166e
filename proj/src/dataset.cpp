#include "pvoros/dataset.hpp"

#include "pvoros/errors.hpp"

#include <string>

namespace pvoros {

DatasetProfile::DatasetProfile(long long pos, long long neg) : n_pos(pos), n_neg(neg) {
    if (pos < 1 || neg < 1) {
        throw ConfigError("dataset profile requires at least one positive and one negative "
                          "example (got n_pos=" +
                          std::to_string(pos) + ", n_neg=" + std::to_string(neg) + ")");
    }
}

} // namespace pvoros
