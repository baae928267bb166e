#include "pvoros/report.hpp"

#include "pvoros/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace pvoros {

std::vector<double> GridAxis::values() const {
    if (n < 1) throw ConfigError("grid axis needs at least one value");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < n; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return out;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

// JSON has no inf literal; thresholds at the sweep ends need one.
std::string jnum(double v) {
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    if (std::isnan(v)) return "\"nan\"";
    return format_double(v);
}

void check_practical_assumptions(const DatasetProfile& profile, const Constraints& cons) {
    if (!profile.negatives_dominant()) {
        throw ConfigError("assumption violated: positives must be fewer than negatives "
                          "(n_pos=" +
                          std::to_string(profile.n_pos) +
                          ", n_neg=" + std::to_string(profile.n_neg) + ")");
    }
    const double p = profile.prevalence();
    if (!(cons.alpha > p)) {
        throw ConfigError("assumption violated: minimum precision must exceed prevalence "
                          "(alpha=" +
                          format_double(cons.alpha) + ", prevalence=" + format_double(p) + ")");
    }
    if (!(cons.alpha < 1.0)) {
        throw ConfigError("assumption violated: minimum precision must be below 1 (alpha=" +
                          format_double(cons.alpha) + ")");
    }
    if (!(cons.kappa > 0.0 && cons.kappa < profile.total())) {
        throw ConfigError("assumption violated: capacity must satisfy 0 < kappa < total "
                          "(kappa=" +
                          format_double(cons.kappa) +
                          ", total=" + format_double(profile.total()) + ")");
    }
}

std::string policy_json(const ThresholdPolicy& policy, int indent) {
    const std::string pad(indent, ' ');
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < policy.entries.size(); ++i) {
        const PolicyEntry& e = policy.entries[i];
        if (i) os << ",";
        os << "\n" << pad << "  {\"t_low\": " << jnum(e.t_low) << ", \"t_high\": " << jnum(e.t_high)
           << ", \"fpr\": " << jnum(e.point.fpr) << ", \"tpr\": " << jnum(e.point.tpr)
           << ", \"threshold\": " << (e.threshold ? jnum(*e.threshold) : "null") << "}";
    }
    if (!policy.entries.empty()) os << "\n" << pad;
    os << "]";
    return os.str();
}

std::string selection_entry_json(const SelectionReport& sel, int indent) {
    const std::string pad(indent, ' ');
    std::ostringstream os;
    os << pad << "{\n";
    os << pad << "  \"strategy\": " << jstr(to_string(sel.strategy)) << ",\n";
    os << pad << "  \"winner\": " << jstr(sel.winner) << ",\n";
    os << pad << "  \"metric\": " << jnum(sel.metric) << ",\n";
    os << pad << "  \"no_feasible_candidate\": " << (sel.no_feasible_candidate ? "true" : "false")
       << ",\n";
    os << pad << "  \"policy_available\": " << (sel.policy_available ? "true" : "false") << ",\n";
    os << pad << "  \"policy\": " << policy_json(sel.policy, indent + 2);
    if (sel.expected_test_cost) {
        os << ",\n" << pad << "  \"expected_test_cost\": " << jnum(*sel.expected_test_cost);
    }
    if (sel.mc_seed) {
        os << ",\n" << pad << "  \"mc_seed\": " << *sel.mc_seed;
    }
    if (sel.mc_samples) {
        os << ",\n" << pad << "  \"mc_samples\": " << *sel.mc_samples;
    }
    os << "\n" << pad << "}";
    return os.str();
}

std::string heatmap_json(const HeatmapGrid& grid, int indent) {
    const std::string pad(indent, ' ');
    std::ostringstream os;
    os << "{\n";
    os << pad << "  \"epsilon\": " << jnum(grid.epsilon) << ",\n";
    os << pad << "  \"alphas\": [";
    for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
        if (i) os << ", ";
        os << jnum(grid.alphas[i]);
    }
    os << "],\n";
    os << pad << "  \"kappa_fracs\": [";
    for (std::size_t i = 0; i < grid.kappa_fracs.size(); ++i) {
        if (i) os << ", ";
        os << jnum(grid.kappa_fracs[i]);
    }
    os << "],\n";
    os << pad << "  \"candidates\": [";
    for (std::size_t i = 0; i < grid.candidate_names.size(); ++i) {
        if (i) os << ", ";
        os << jstr(grid.candidate_names[i]);
    }
    os << "],\n";
    os << pad << "  \"cells\": [";
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
        const HeatmapCell& cell = grid.cells[i];
        if (i) os << ",";
        os << "\n" << pad << "    {\"alpha\": " << jnum(cell.alpha)
           << ", \"kappa\": " << jnum(cell.kappa) << ", \"kappa_frac\": " << jnum(cell.kappa_frac)
           << ", \"winner\": " << jstr(cell.winner) << ", \"pv\": [";
        for (std::size_t j = 0; j < cell.pv.size(); ++j) {
            if (j) os << ", ";
            os << jnum(cell.pv[j]);
        }
        os << "]}";
    }
    if (!grid.cells.empty()) os << "\n" << pad << "  ";
    os << "]\n";
    os << pad << "}";
    return os.str();
}

struct PlotFrame {
    double margin = 60.0;
    double size = 480.0;

    double x(double fpr) const { return margin + fpr * size; }
    double y(double tpr) const { return margin + (1.0 - tpr) * size; }
    double width() const { return size + 2 * margin; }
    double height() const { return size + 2 * margin; }
};

void svg_header(std::ostringstream& os, double w, double h) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

// clip an infinite line to the unit square, returning up to one segment
bool square_segment(const Line& ln, RocPoint& a, RocPoint& b) {
    std::vector<RocPoint> hits;
    auto try_add = [&](const Line& edge, double lo_x, double hi_x, double lo_y, double hi_y) {
        try {
            RocPoint q = intersect(ln, edge);
            if (q.fpr >= lo_x - 1e-9 && q.fpr <= hi_x + 1e-9 && q.tpr >= lo_y - 1e-9 &&
                q.tpr <= hi_y + 1e-9) {
                for (const RocPoint& h : hits) {
                    if (nearly_equal(h, q, 1e-9)) return;
                }
                hits.push_back(q);
            }
        } catch (const std::domain_error&) {
        }
    };
    try_add(Line{0.0, 1.0, 0.0}, 0.0, 1.0, 0.0, 0.0); // y = 0
    try_add(Line{0.0, 1.0, 1.0}, 0.0, 1.0, 1.0, 1.0); // y = 1
    try_add(Line{1.0, 0.0, 0.0}, 0.0, 0.0, 0.0, 1.0); // x = 0
    try_add(Line{1.0, 0.0, 1.0}, 1.0, 1.0, 0.0, 1.0); // x = 1
    if (hits.size() < 2) return false;
    a = hits[0];
    b = hits[1];
    return true;
}

const std::vector<std::string>& palette() {
    static const std::vector<std::string> colors{"#4c78a8", "#f58518", "#54a24b",
                                                 "#e45756", "#72b7b2", "#b279a2"};
    return colors;
}

} // namespace

ResolvedInputs resolve_inputs(const RunConfig& config) {
    CandidateSet set;
    std::optional<DatasetProfile> profile = config.profile;

    for (const auto& [name, path] : config.scores_files) {
        const ScoreSet scores = read_scores_csv(path);
        const DatasetProfile file_profile = profile_from_labels(scores.labels);
        if (profile && !(*profile == file_profile)) {
            throw ConfigError("class counts in " + path.string() + " (n_pos=" +
                              std::to_string(file_profile.n_pos) + ", n_neg=" +
                              std::to_string(file_profile.n_neg) +
                              ") do not match the configured/inferred profile");
        }
        if (!profile) profile = file_profile;
        set.add(Candidate{name, build_roc_curve(scores.scores, scores.labels), std::nullopt});
    }
    for (const auto& [name, path] : config.rocpoints_files) {
        set.add(Candidate{name, read_rocpoints_csv(path), std::nullopt});
    }
    if (set.candidates.empty()) throw ConfigError("no candidate files given");
    if (!profile) {
        throw ConfigError("dataset profile unknown: pass explicit class counts when all "
                          "candidates are rocpoints files");
    }
    for (const auto& [name, path] : config.test_scores_files) {
        bool found = false;
        for (Candidate& c : set.candidates) {
            if (c.name == name) {
                c.test = read_scores_csv(path);
                found = true;
                break;
            }
        }
        if (!found) throw ConfigError("test scores given for unknown candidate '" + name + "'");
    }

    double kappa;
    if (config.kappa_abs && config.kappa_frac) {
        throw ConfigError("give kappa either as an absolute count or as a fraction, not both");
    } else if (config.kappa_abs) {
        kappa = *config.kappa_abs;
    } else if (config.kappa_frac) {
        kappa = *config.kappa_frac * profile->total();
    } else {
        throw ConfigError("maximum capacity kappa is required (absolute count or fraction)");
    }

    CostSpec spec = config.use_ratio ? CostSpec::cost_ratio(config.spec_lo, config.spec_hi, *profile)
                                     : CostSpec::uniform_t(config.spec_lo, config.spec_hi);
    spec.resolution = config.resolution;
    spec.samples = config.samples;
    spec.seed = config.seed;

    return ResolvedInputs{*profile, Constraints(config.alpha, kappa), spec, std::move(set)};
}

std::string report_json(const ResolvedInputs& in, const FeasibleRegion& region,
                        const std::vector<SelectionReport>& selections,
                        const std::optional<HeatmapGrid>& grid) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"schema\": \"pvoros/1\",\n";
    os << "  \"profile\": {\"n_pos\": " << in.profile.n_pos << ", \"n_neg\": " << in.profile.n_neg
       << ", \"prevalence\": " << jnum(in.profile.prevalence()) << "},\n";
    os << "  \"constraints\": {\"alpha\": " << jnum(in.constraints.alpha)
       << ", \"kappa\": " << jnum(in.constraints.kappa)
       << ", \"kappa_frac\": " << jnum(in.constraints.kappa / in.profile.total()) << "},\n";
    os << "  \"cost_spec\": {";
    if (in.spec.is_ratio()) {
        const auto& r = std::get<CostRatioInterval>(in.spec.kind);
        os << "\"kind\": \"cost_ratio\", \"ratio_low\": " << jnum(r.lo)
           << ", \"ratio_high\": " << jnum(r.hi) << ", ";
    } else {
        os << "\"kind\": \"uniform_t\", ";
    }
    os << "\"t_low\": " << jnum(in.spec.t_low()) << ", \"t_high\": " << jnum(in.spec.t_high())
       << ", \"resolution\": " << in.spec.resolution << ", \"samples\": " << in.spec.samples
       << ", \"seed\": " << in.spec.seed << "},\n";
    os << "  \"never_alarm_t_bound\": "
       << jnum(never_alarm_t_bound(in.profile, in.constraints.alpha)) << ",\n";
    os << "  \"region\": {\"case\": " << jstr(to_string(region.tag))
       << ", \"area\": " << jnum(region.area) << ", \"vertices\": [";
    for (std::size_t i = 0; i < region.vertices.size(); ++i) {
        if (i) os << ", ";
        os << "[" << jnum(region.vertices[i].fpr) << ", " << jnum(region.vertices[i].tpr) << "]";
    }
    os << "]},\n";

    os << "  \"candidates\": [";
    for (std::size_t i = 0; i < in.candidates.candidates.size(); ++i) {
        const Candidate& c = in.candidates.candidates[i];
        const PartialVorosResult pv = partial_voros_detailed(c.validation, region, in.spec);
        if (i) os << ",";
        os << "\n    {\"name\": " << jstr(c.name) << ", \"pv\": " << jnum(pv.value)
           << ", \"pv_feasible_hull_empty\": " << (pv.feasible_hull_empty ? "true" : "false")
           << ", \"voros\": " << jnum(voros_unconstrained(c.validation, in.spec))
           << ", \"feasible_recall\": " << jnum(feasible_recall(c.validation, region))
           << ", \"feasible_pauroc\": " << jnum(feasible_pauroc(c.validation, region))
           << ", \"auroc\": " << jnum(auroc(c.validation)) << ", \"has_test_scores\": "
           << (c.test ? "true" : "false") << "}";
    }
    os << "\n  ],\n";

    os << "  \"selections\": [";
    for (std::size_t i = 0; i < selections.size(); ++i) {
        if (i) os << ",";
        os << "\n" << selection_entry_json(selections[i], 4);
    }
    os << "\n  ]";
    if (grid) {
        os << ",\n  \"heatmap\": " << heatmap_json(*grid, 2);
    }
    os << "\n}\n";
    return os.str();
}

std::string selection_json(const std::vector<SelectionReport>& selections) {
    std::ostringstream os;
    os << "{\n  \"schema\": \"pvoros/1\",\n  \"selections\": [";
    for (std::size_t i = 0; i < selections.size(); ++i) {
        if (i) os << ",";
        os << "\n" << selection_entry_json(selections[i], 4);
    }
    os << "\n  ]\n}\n";
    return os.str();
}

std::string heatmap_csv(const HeatmapGrid& grid) {
    std::string out = "alpha,kappa,kappa_frac,winner";
    for (const std::string& name : grid.candidate_names) out += ",pv_" + name;
    out += '\n';
    for (const HeatmapCell& cell : grid.cells) {
        out += format_double(cell.alpha);
        out += ',';
        out += format_double(cell.kappa);
        out += ',';
        out += format_double(cell.kappa_frac);
        out += ',';
        out += cell.winner;
        for (double v : cell.pv) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::string region_svg(const FeasibleRegion& region, const CostSpec& spec) {
    PlotFrame fr;
    std::ostringstream os;
    svg_header(os, fr.width(), fr.height());

    // axes box
    os << "<rect x=\"" << fr.x(0) << "\" y=\"" << fr.y(1) << "\" width=\"" << fr.size
       << "\" height=\"" << fr.size << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double v = i / 5.0;
        os << "<text x=\"" << fr.x(v) << "\" y=\"" << fr.y(0) + 18
           << "\" font-size=\"11\" text-anchor=\"middle\">" << v << "</text>\n";
        os << "<text x=\"" << fr.x(0) - 8 << "\" y=\"" << fr.y(v) + 4
           << "\" font-size=\"11\" text-anchor=\"end\">" << v << "</text>\n";
    }
    os << "<text x=\"" << fr.x(0.5) << "\" y=\"" << fr.height() - 12
       << "\" font-size=\"13\" text-anchor=\"middle\">false positive rate</text>\n";
    os << "<text x=\"16\" y=\"" << fr.y(0.5)
       << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << fr.y(0.5)
       << ")\">true positive rate</text>\n";

    // feasible polygon
    os << "<polygon points=\"";
    for (const RocPoint& v : region.vertices) {
        os << fr.x(v.fpr) << "," << fr.y(v.tpr) << " ";
    }
    os << "\" fill=\"#e8c547\" fill-opacity=\"0.55\" stroke=\"#a07d00\" stroke-width=\"1.5\"/>\n";

    // bound lines across the square
    auto draw_line = [&](const Line& ln, const char* color, const char* dash) {
        RocPoint a, b;
        if (!square_segment(ln, a, b)) return;
        os << "<line x1=\"" << fr.x(a.fpr) << "\" y1=\"" << fr.y(a.tpr) << "\" x2=\""
           << fr.x(b.fpr) << "\" y2=\"" << fr.y(b.tpr) << "\" stroke=\"" << color
           << "\" stroke-width=\"1.2\"" << dash << "/>\n";
    };
    if (region.constraints.alpha > 0.0 && region.constraints.alpha < 1.0) {
        draw_line(precision_line(region.profile, region.constraints.alpha), "#1f77b4", "");
    }
    if (region.constraints.kappa < region.profile.total()) {
        draw_line(capacity_line(region.profile, region.constraints.kappa), "#d62728", "");
    }

    // sample iso lines through the topmost y-axis vertex of the region
    RocPoint top{0.0, 0.0};
    for (const RocPoint& v : region.vertices) {
        if (v.fpr <= 1e-12 && v.tpr > top.tpr) top = v;
    }
    const double ts[3] = {spec.t_low(), (spec.t_low() + spec.t_high()) / 2.0, spec.t_high()};
    for (double t : ts) {
        draw_line(iso_line(top, CostModel(t)).line, "#555555", " stroke-dasharray=\"6 4\"");
    }

    os << "<text x=\"" << fr.x(0.5) << "\" y=\"" << fr.y(1) - 14
       << "\" font-size=\"13\" text-anchor=\"middle\">feasible region (" << to_string(region.tag)
       << "), alpha=" << region.constraints.alpha << ", kappa=" << region.constraints.kappa
       << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string area_vs_t_csv(const ResolvedInputs& in, const FeasibleRegion& region) {
    struct Prepared {
        std::string name;
        std::vector<OptimalRange> ranges;
    };
    std::vector<Prepared> prepared;
    for (const Candidate& c : in.candidates.candidates) {
        const HullCurve hull = feasible_upper_hull(c.validation, region);
        prepared.push_back(Prepared{
            c.name, hull.points.empty() ? std::vector<OptimalRange>{}
                                        : optimal_t_ranges(hull, region)});
    }

    std::string out = "t";
    for (const Prepared& p : prepared) out += "," + p.name;
    out += '\n';

    const int n = std::max(in.spec.resolution, 2);
    const double lo = in.spec.t_low();
    const double hi = in.spec.t_high();
    for (int i = 0; i < n; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        out += format_double(t);
        const CostModel m(t);
        for (const Prepared& p : prepared) {
            out += ',';
            out += format_double(best_normalized_area(p.ranges, region, m));
        }
        out += '\n';
    }
    return out;
}

std::string heatmap_svg(const HeatmapGrid& grid) {
    PlotFrame fr;
    const std::size_t na = grid.alphas.size();
    const std::size_t nk = grid.kappa_fracs.size();
    std::ostringstream os;
    svg_header(os, fr.width() + 160.0, fr.height());

    const double cw = fr.size / static_cast<double>(nk);
    const double ch = fr.size / static_cast<double>(na);
    for (std::size_t ai = 0; ai < na; ++ai) {
        for (std::size_t ki = 0; ki < nk; ++ki) {
            const HeatmapCell& cell = grid.at(ai, ki);
            std::string color = "#ffffff";
            if (cell.tie) {
                color = "#bbbbbb";
            } else if (!cell.invalid) {
                for (std::size_t ci = 0; ci < grid.candidate_names.size(); ++ci) {
                    if (grid.candidate_names[ci] == cell.winner) {
                        color = palette()[ci % palette().size()];
                        break;
                    }
                }
            }
            const double x = fr.margin + static_cast<double>(ki) * cw;
            const double y = fr.margin + fr.size - static_cast<double>(ai + 1) * ch;
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw << "\" height=\""
               << ch << "\" fill=\"" << color << "\" stroke=\"#888\" stroke-width=\"0.4\"/>\n";
        }
    }
    for (std::size_t ki = 0; ki < nk; ++ki) {
        os << "<text x=\"" << fr.margin + (static_cast<double>(ki) + 0.5) * cw << "\" y=\""
           << fr.margin + fr.size + 16 << "\" font-size=\"9\" text-anchor=\"middle\">"
           << format_double(grid.kappa_fracs[ki]).substr(0, 6) << "</text>\n";
    }
    for (std::size_t ai = 0; ai < na; ++ai) {
        os << "<text x=\"" << fr.margin - 6 << "\" y=\""
           << fr.margin + fr.size - (static_cast<double>(ai) + 0.5) * ch + 3
           << "\" font-size=\"9\" text-anchor=\"end\">"
           << format_double(grid.alphas[ai]).substr(0, 5) << "</text>\n";
    }
    os << "<text x=\"" << fr.margin + fr.size / 2 << "\" y=\"" << fr.height() - 12
       << "\" font-size=\"13\" text-anchor=\"middle\">capacity (fraction of examples)</text>\n";
    os << "<text x=\"16\" y=\"" << fr.margin + fr.size / 2
       << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << fr.margin + fr.size / 2 << ")\">minimum precision</text>\n";

    double ly = fr.margin;
    auto legend = [&](const std::string& label, const std::string& color) {
        os << "<rect x=\"" << fr.width() + 10 << "\" y=\"" << ly
           << "\" width=\"14\" height=\"14\" fill=\"" << color << "\" stroke=\"#888\"/>\n";
        os << "<text x=\"" << fr.width() + 30 << "\" y=\"" << ly + 11 << "\" font-size=\"12\">"
           << json_escape(label) << "</text>\n";
        ly += 22.0;
    };
    for (std::size_t ci = 0; ci < grid.candidate_names.size(); ++ci) {
        legend(grid.candidate_names[ci], palette()[ci % palette().size()]);
    }
    legend("tie", "#bbbbbb");
    legend("invalid", "#ffffff");
    os << "</svg>\n";
    return os.str();
}

namespace {

std::vector<SelectionReport> run_selections(const ResolvedInputs& in,
                                            const FeasibleRegion& region,
                                            const std::vector<Strategy>& wanted) {
    std::vector<Strategy> strategies = wanted;
    if (strategies.empty()) {
        strategies = {Strategy::MaxPV, Strategy::MaxVOROS, Strategy::MaxFeasibleRecall,
                      Strategy::MaxFeasiblePAUROC};
    }
    std::vector<SelectionReport> out;
    out.reserve(strategies.size());
    for (Strategy s : strategies) {
        out.push_back(select_model(in.candidates, s, region, in.spec));
    }
    return out;
}

} // namespace

void run_report(const RunConfig& config) {
    const ResolvedInputs in = resolve_inputs(config);
    check_practical_assumptions(in.profile, in.constraints);
    in.spec.require_within_bound(in.profile, in.constraints.alpha);

    const FeasibleRegion region = region_polygon(in.profile, in.constraints);
    const std::vector<SelectionReport> selections = run_selections(in, region, config.strategies);

    std::optional<HeatmapGrid> grid;
    if (in.candidates.candidates.size() >= 2) {
        grid = win_heatmap(in.candidates, in.profile, config.grid_alpha.values(),
                           config.grid_kappa_frac.values(), in.spec, config.heatmap_epsilon,
                           config.threads);
    }

    std::filesystem::create_directories(config.out_dir);
    atomic_write_text(config.out_dir / "report.json", report_json(in, region, selections, grid));
    atomic_write_text(config.out_dir / "region.svg", region_svg(region, in.spec));
    atomic_write_text(config.out_dir / "area_vs_t.csv", area_vs_t_csv(in, region));
    if (grid) {
        atomic_write_text(config.out_dir / "heatmap.csv", heatmap_csv(*grid));
        atomic_write_text(config.out_dir / "heatmap.svg", heatmap_svg(*grid));
    }
}

void run_heatmap(const RunConfig& config) {
    RunConfig cell_config = config;
    if (!cell_config.kappa_abs && !cell_config.kappa_frac) {
        cell_config.kappa_frac = 0.5; // per-cell constraints come from the grid
    }
    const ResolvedInputs in = resolve_inputs(cell_config);
    const HeatmapGrid grid =
        win_heatmap(in.candidates, in.profile, config.grid_alpha.values(),
                    config.grid_kappa_frac.values(), in.spec, config.heatmap_epsilon,
                    config.threads);
    std::filesystem::create_directories(config.out_dir);
    atomic_write_text(config.out_dir / "heatmap.csv", heatmap_csv(grid));
    atomic_write_text(config.out_dir / "heatmap.svg", heatmap_svg(grid));
}

void run_select(const RunConfig& config, const std::filesystem::path& out) {
    const ResolvedInputs in = resolve_inputs(config);
    check_practical_assumptions(in.profile, in.constraints);
    in.spec.require_within_bound(in.profile, in.constraints.alpha);
    const FeasibleRegion region = region_polygon(in.profile, in.constraints);
    const std::string json = selection_json(run_selections(in, region, config.strategies));
    if (out.empty()) {
        std::fputs(json.c_str(), stdout);
    } else {
        if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
        atomic_write_text(out, json);
    }
}

} // namespace pvoros
