#pragma once

#include "pvoros/roc_curve.hpp"
#include "pvoros/selection.hpp"

#include <filesystem>
#include <span>
#include <string>

namespace pvoros {

// %.17g formatting used for every float we serialize (CSV and JSON).
std::string format_double(double v);

// Write-temp-then-rename so readers never observe partial files.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);

// scores format: header "id,score,label", label in {0,1}.
ScoreSet read_scores_csv(const std::filesystem::path& path);
void write_scores_csv(const std::filesystem::path& path, const ScoreSet& set);

// rocpoints format: header "fpr,tpr" or "fpr,tpr,threshold".
RocCurve read_rocpoints_csv(const std::filesystem::path& path);
void write_rocpoints_csv(const std::filesystem::path& path, const RocCurve& curve);

DatasetProfile profile_from_labels(std::span<const int> labels);

} // namespace pvoros
