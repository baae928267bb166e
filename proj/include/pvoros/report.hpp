#pragma once

#include "pvoros/cost_spec.hpp"
#include "pvoros/selection.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pvoros {

struct GridAxis {
    double lo{0.0};
    double hi{1.0};
    int n{11};

    std::vector<double> values() const;
};

// Everything the report/heatmap/select commands need, already parsed.
// validate() resolves kappa and the cost spec against the profile and throws
// ConfigError with the violated assumption spelled out.
struct RunConfig {
    std::optional<DatasetProfile> profile; // inferred from labels when absent

    double alpha{0.0};
    std::optional<double> kappa_abs;
    std::optional<double> kappa_frac;

    bool use_ratio{false}; // t interval vs C0/C1 interval
    double spec_lo{0.0};
    double spec_hi{0.0};
    int resolution{1025};
    long samples{100000};
    std::uint64_t seed{0};

    std::vector<Strategy> strategies; // empty = all four

    GridAxis grid_alpha{0.1, 0.6, 11};
    GridAxis grid_kappa_frac{0.005, 0.7, 11};
    double heatmap_epsilon{0.01};

    std::filesystem::path out_dir;
    int threads{1};

    // name -> file path; names must be unique across both maps
    std::vector<std::pair<std::string, std::filesystem::path>> scores_files;
    std::vector<std::pair<std::string, std::filesystem::path>> rocpoints_files;
    std::vector<std::pair<std::string, std::filesystem::path>> test_scores_files;
};

struct ResolvedInputs {
    DatasetProfile profile;
    Constraints constraints;
    CostSpec spec;
    CandidateSet candidates;
};

// Ingest candidate files, infer/check the profile, resolve kappa, build the
// cost spec and check it against the never-alarm bound.
ResolvedInputs resolve_inputs(const RunConfig& config);

// Emits report.json, region.svg, area_vs_t.csv and (when >= 2 candidates)
// heatmap.csv + heatmap.svg into config.out_dir.
void run_report(const RunConfig& config);

// Heatmap files only.
void run_heatmap(const RunConfig& config);

// Selection report JSON; empty out path prints to stdout.
void run_select(const RunConfig& config, const std::filesystem::path& out);

// Serializers (exposed for tests).
std::string report_json(const ResolvedInputs& in, const FeasibleRegion& region,
                        const std::vector<SelectionReport>& selections,
                        const std::optional<HeatmapGrid>& grid);
std::string heatmap_csv(const HeatmapGrid& grid);
std::string heatmap_svg(const HeatmapGrid& grid);
std::string region_svg(const FeasibleRegion& region, const CostSpec& spec);
std::string area_vs_t_csv(const ResolvedInputs& in, const FeasibleRegion& region);
std::string selection_json(const std::vector<SelectionReport>& selections);

} // namespace pvoros
