#include "pvoros/cli.hpp"

#include "pvoros/io.hpp"
#include "pvoros/report.hpp"
#include "pvoros/synth.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <thread>

namespace pvoros {

namespace {

std::pair<std::string, std::filesystem::path> parse_named_path(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) {
        const std::filesystem::path p(arg);
        return {p.stem().string(), p};
    }
    return {arg.substr(0, eq), std::filesystem::path(arg.substr(eq + 1))};
}

std::pair<double, double> parse_range(const std::string& arg, const char* what) {
    const auto colon = arg.find(':');
    if (colon == std::string::npos) {
        throw ConfigError(std::string(what) + " must look like LO:HI, got '" + arg + "'");
    }
    try {
        return {std::stod(arg.substr(0, colon)), std::stod(arg.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ConfigError(std::string(what) + " must look like LO:HI, got '" + arg + "'");
    }
}

GridAxis parse_axis(const std::string& arg, const char* what) {
    const auto c1 = arg.find(':');
    const auto c2 = arg.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ConfigError(std::string(what) + " must look like LO:HI:N, got '" + arg + "'");
    }
    try {
        return GridAxis{std::stod(arg.substr(0, c1)), std::stod(arg.substr(c1 + 1, c2 - c1 - 1)),
                        std::stoi(arg.substr(c2 + 1))};
    } catch (const std::exception&) {
        throw ConfigError(std::string(what) + " must look like LO:HI:N, got '" + arg + "'");
    }
}

int default_threads() {
    if (const char* env = std::getenv("PVOROS_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct CommonOptions {
    std::vector<std::string> scores;
    std::vector<std::string> rocpoints;
    std::vector<std::string> test_scores;
    long long pos = 0;
    long long neg = 0;
    double alpha = 0.0;
    double kappa = -1.0;
    double kappa_frac = -1.0;
    std::string t_range;
    std::string ratio_range;
    int resolution = 1025;
    long samples = 100000;
    std::uint64_t seed = 0;
    std::vector<std::string> strategies;
    std::string grid_alpha = "0.1:0.6:11";
    std::string grid_kappa_frac = "0.005:0.7:11";
    double epsilon = 0.01;
    std::string out_dir = "pvoros_out";
};

void add_candidate_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--scores", opt.scores,
                    "validation scores CSV (id,score,label); NAME=PATH or PATH");
    cmd->add_option("--rocpoints", opt.rocpoints,
                    "validation rocpoints CSV (fpr,tpr[,threshold]); NAME=PATH or PATH");
    cmd->add_option("--test-scores", opt.test_scores, "test scores CSV paired by NAME=PATH");
    cmd->add_option("--pos", opt.pos, "positive count (required with rocpoints-only input)");
    cmd->add_option("--neg", opt.neg, "negative count (required with rocpoints-only input)");
}

void add_constraint_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--alpha", opt.alpha, "minimum precision")->required();
    cmd->add_option("--kappa", opt.kappa, "maximum predicted positives (absolute count)");
    cmd->add_option("--kappa-frac", opt.kappa_frac, "maximum predicted positives as a fraction");
}

void add_spec_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--t-range", opt.t_range, "uniform cost parameter interval LO:HI");
    cmd->add_option("--ratio-range", opt.ratio_range, "uniform C0/C1 interval LO:HI");
    cmd->add_option("--resolution", opt.resolution, "quadrature nodes (default 1025)");
    cmd->add_option("--samples", opt.samples, "Monte Carlo samples (default 100000)");
    cmd->add_option("--seed", opt.seed, "random seed recorded in reports");
}

RunConfig build_config(const CommonOptions& opt, bool need_spec) {
    RunConfig config;
    for (const std::string& arg : opt.scores) config.scores_files.push_back(parse_named_path(arg));
    for (const std::string& arg : opt.rocpoints) {
        config.rocpoints_files.push_back(parse_named_path(arg));
    }
    for (const std::string& arg : opt.test_scores) {
        config.test_scores_files.push_back(parse_named_path(arg));
    }
    if (opt.pos > 0 || opt.neg > 0) config.profile = DatasetProfile(opt.pos, opt.neg);
    config.alpha = opt.alpha;
    if (opt.kappa >= 0.0) config.kappa_abs = opt.kappa;
    if (opt.kappa_frac >= 0.0) config.kappa_frac = opt.kappa_frac;

    if (!opt.t_range.empty() && !opt.ratio_range.empty()) {
        throw ConfigError("give either --t-range or --ratio-range, not both");
    }
    if (opt.t_range.empty() && opt.ratio_range.empty()) {
        if (need_spec) throw ConfigError("a cost range is required: --t-range or --ratio-range");
    } else if (!opt.t_range.empty()) {
        std::tie(config.spec_lo, config.spec_hi) = parse_range(opt.t_range, "--t-range");
        config.use_ratio = false;
    } else {
        std::tie(config.spec_lo, config.spec_hi) = parse_range(opt.ratio_range, "--ratio-range");
        config.use_ratio = true;
    }
    config.resolution = opt.resolution;
    config.samples = opt.samples;
    config.seed = opt.seed;
    for (const std::string& s : opt.strategies) {
        config.strategies.push_back(strategy_from_string(s));
    }
    config.grid_alpha = parse_axis(opt.grid_alpha, "--grid-alpha");
    config.grid_kappa_frac = parse_axis(opt.grid_kappa_frac, "--grid-kappa-frac");
    config.heatmap_epsilon = opt.epsilon;
    config.out_dir = opt.out_dir;
    config.threads = default_threads();
    return config;
}

void print_region(long long pos, long long neg, double alpha, double kappa, double kappa_frac) {
    const DatasetProfile profile(pos, neg);
    double resolved;
    if (kappa >= 0.0 && kappa_frac >= 0.0) {
        throw ConfigError("give kappa either as an absolute count or as a fraction, not both");
    } else if (kappa >= 0.0) {
        resolved = kappa;
    } else if (kappa_frac >= 0.0) {
        resolved = kappa_frac * profile.total();
    } else {
        throw ConfigError("maximum capacity kappa is required (--kappa or --kappa-frac)");
    }
    const Constraints cons(alpha, resolved);
    const RegionCase tag = classify_region(profile, cons);

    std::string out = "{\n  \"case\": \"";
    out += to_string(tag);
    out += "\",\n";
    try {
        const FeasibleRegion region = region_polygon(profile, cons);
        out += "  \"area\": " + format_double(region.area) + ",\n  \"vertices\": [";
        for (std::size_t i = 0; i < region.vertices.size(); ++i) {
            if (i) out += ", ";
            out += "[" + format_double(region.vertices[i].fpr) + ", " +
                   format_double(region.vertices[i].tpr) + "]";
        }
        out += "]\n}\n";
    } catch (const DegenerateRegionError&) {
        out += "  \"area\": null,\n  \"vertices\": []\n}\n";
    }
    std::fputs(out.c_str(), stdout);
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"cost-aware evaluation of binary classifiers under precision and "
                 "capacity constraints"};
    app.require_subcommand(1);

    // region
    auto* region_cmd = app.add_subcommand("region", "print feasible-region case/vertices/area");
    long long region_pos = 0, region_neg = 0;
    double region_alpha = 0.0, region_kappa = -1.0, region_kappa_frac = -1.0;
    region_cmd->add_option("--pos", region_pos, "positive count")->required();
    region_cmd->add_option("--neg", region_neg, "negative count")->required();
    region_cmd->add_option("--alpha", region_alpha, "minimum precision")->required();
    region_cmd->add_option("--kappa", region_kappa, "maximum predicted positives");
    region_cmd->add_option("--kappa-frac", region_kappa_frac, "capacity as fraction of examples");
    region_cmd->callback([&]() {
        print_region(region_pos, region_neg, region_alpha, region_kappa, region_kappa_frac);
    });

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "generate two-Gaussian synthetic scores");
    SynthSpec synth_spec;
    std::string synth_out;
    synth_cmd->add_option("--out", synth_out, "output scores CSV path")->required();
    synth_cmd->add_option("--n-pos", synth_spec.n_pos, "positive examples")->required();
    synth_cmd->add_option("--n-neg", synth_spec.n_neg, "negative examples")->required();
    synth_cmd->add_option("--mu-pos", synth_spec.mu_pos, "positive score mean");
    synth_cmd->add_option("--mu-neg", synth_spec.mu_neg, "negative score mean");
    synth_cmd->add_option("--sigma-pos", synth_spec.sigma_pos, "positive score stddev");
    synth_cmd->add_option("--sigma-neg", synth_spec.sigma_neg, "negative score stddev");
    synth_cmd->add_option("--seed", synth_spec.seed, "random seed");
    synth_cmd->callback([&]() { write_scores_csv(synth_out, synth_generate(synth_spec)); });

    // report
    auto* report_cmd = app.add_subcommand("report", "full evaluation report + plot data");
    CommonOptions report_opt;
    add_candidate_options(report_cmd, report_opt);
    add_constraint_options(report_cmd, report_opt);
    add_spec_options(report_cmd, report_opt);
    report_cmd->add_option("--strategies", report_opt.strategies,
                           "subset of max_pv,max_voros,max_feasible_recall,max_feasible_pauroc");
    report_cmd->add_option("--grid-alpha", report_opt.grid_alpha, "heatmap alpha axis LO:HI:N");
    report_cmd->add_option("--grid-kappa-frac", report_opt.grid_kappa_frac,
                           "heatmap capacity axis LO:HI:N (fractions)");
    report_cmd->add_option("--epsilon", report_opt.epsilon, "heatmap tie threshold");
    report_cmd->add_option("--out-dir", report_opt.out_dir, "output directory")->required();
    report_cmd->callback([&]() { run_report(build_config(report_opt, true)); });

    // heatmap
    auto* heatmap_cmd = app.add_subcommand("heatmap", "winner heatmap over an (alpha,kappa) grid");
    CommonOptions heatmap_opt;
    add_candidate_options(heatmap_cmd, heatmap_opt);
    add_spec_options(heatmap_cmd, heatmap_opt);
    heatmap_cmd->add_option("--grid-alpha", heatmap_opt.grid_alpha, "alpha axis LO:HI:N");
    heatmap_cmd->add_option("--grid-kappa-frac", heatmap_opt.grid_kappa_frac,
                            "capacity axis LO:HI:N (fractions)");
    heatmap_cmd->add_option("--epsilon", heatmap_opt.epsilon, "tie threshold");
    heatmap_cmd->add_option("--out-dir", heatmap_opt.out_dir, "output directory")->required();
    heatmap_cmd->callback([&]() { run_heatmap(build_config(heatmap_opt, true)); });

    // select
    auto* select_cmd = app.add_subcommand("select", "model selection report");
    CommonOptions select_opt;
    std::string select_out;
    add_candidate_options(select_cmd, select_opt);
    add_constraint_options(select_cmd, select_opt);
    add_spec_options(select_cmd, select_opt);
    select_cmd->add_option("--strategies", select_opt.strategies,
                           "subset of max_pv,max_voros,max_feasible_recall,max_feasible_pauroc");
    select_cmd->add_option("--out", select_out, "output JSON path (stdout when omitted)");
    select_cmd->callback(
        [&]() { run_select(build_config(select_opt, true), std::filesystem::path(select_out)); });

    std::vector<std::string> argv_storage;
    argv_storage.push_back("pvoros");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_storage.size());
    for (std::string& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
    return 0;
}

} // namespace pvoros
