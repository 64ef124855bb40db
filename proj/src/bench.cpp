#include "cvbench/bench.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cvbench/parallel.hpp"

namespace cvbench {

const char* const kToolName = "cvbench";
const char* const kToolVersion = "0.1.0";

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kGridMassTol = 1e-5;  // marginal mass allowed outside the window

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << body;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return (fs::path(cfg.out_dir) / name).string();
}

// Normalized harmonic-oscillator eigenfunctions, shared with the wigner
// oracle route but repeated here for the marginal-mass grid sizing.
void hermite_basis(double x, int nmax, std::vector<double>& phi) {
    phi.resize(nmax + 1);
    phi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (nmax == 0) return;
    phi[1] = std::numbers::sqrt2 * x * phi[0];
    for (int n = 1; n < nmax; ++n)
        phi[n + 1] = x * std::sqrt(2.0 / (n + 1)) * phi[n] -
                     std::sqrt(double(n) / (n + 1)) * phi[n - 1];
}

// Half-width L >= floor_width with marginal mass outside (−L, L) below
// kGridMassTol. `momentum` selects the |ψ̃(p)|² marginal.
double marginal_half_width(const FockVector& state, bool momentum, double floor_width) {
    const int nmax = state.cutoff();
    const double support = std::sqrt(2.0 * (nmax + 1.0)) + 6.0;
    if (floor_width >= support) return floor_width;

    const double h = 0.02;
    const int n_samples = static_cast<int>(std::ceil(2.0 * support / h)) + 1;
    std::vector<double> density(n_samples);
    std::vector<double> phi;
    for (int i = 0; i < n_samples; ++i) {
        const double u = -support + i * h;
        hermite_basis(u, nmax, phi);
        cdouble psi(0.0, 0.0);
        if (momentum) {
            // ⟨p|n⟩ = (−i)^n φ_n(p)
            cdouble in(1.0, 0.0);
            for (int n = 0; n <= nmax; ++n) {
                psi += state.amplitudes[n] * in * phi[n];
                in *= cdouble(0.0, -1.0);
            }
        } else {
            for (int n = 0; n <= nmax; ++n) psi += state.amplitudes[n] * phi[n];
        }
        density[i] = std::norm(psi);
    }

    // cumulative outside mass, walking inward from both ends
    double outside = 0.0;
    int lo = 0, hi = n_samples - 1;
    double width = support;
    while (lo < hi && width > floor_width) {
        const double next_outside = outside + h * (density[lo] + density[hi]);
        if (next_outside >= kGridMassTol) break;
        outside = next_outside;
        ++lo;
        --hi;
        width -= h;
    }
    return std::max(floor_width, width);
}

int odd_points_for(double half_width, double base_half_width, int base_points) {
    const double spacing = 2.0 * base_half_width / (base_points - 1);
    int n = static_cast<int>(std::ceil(2.0 * half_width / spacing)) + 1;
    if (n % 2 == 0) ++n;
    return std::max(n, base_points);
}

std::string csv_bool(bool v) { return v ? "true" : "false"; }

std::string solution_prefix(const MatchSolution& s) {
    std::ostringstream out;
    out << match_csv_row(s);
    return out.str();
}

} // namespace

// --- config -------------------------------------------------------------------

void apply_config_json(RunConfig& cfg, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("config: expected a JSON object");
    try {
        if (j.contains("cutoff")) cfg.cutoff = j["cutoff"].get<int>();
        if (j.contains("grid_points")) cfg.grid_points = j["grid_points"].get<int>();
        if (j.contains("window")) cfg.window = j["window"].get<double>();
        if (j.contains("threshold")) cfg.threshold = j["threshold"].get<double>();
        if (j.contains("eps_max")) cfg.eps_max = j["eps_max"].get<double>();
        if (j.contains("eps_steps")) cfg.eps_steps = j["eps_steps"].get<int>();
        if (j.contains("n_angles")) cfg.n_angles = j["n_angles"].get<int>();
        if (j.contains("eta")) cfg.eta = j["eta"].get<double>();
        if (j.contains("theta")) cfg.theta = j["theta"].get<double>();
        if (j.contains("targets")) cfg.targets = j["targets"].get<std::vector<double>>();
        if (j.contains("families")) {
            cfg.families.clear();
            for (const auto& name : j["families"])
                cfg.families.push_back(family_from_name(name.get<std::string>()));
        }
        if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    } catch (const json::exception& e) {
        throw parse_error(std::string("config: bad field type: ") + e.what());
    }
}

RunConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("config: cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    RunConfig cfg;
    apply_config_json(cfg, buf.str());
    return cfg;
}

std::string config_to_json(const RunConfig& cfg) {
    json j;
    j["cutoff"] = cfg.cutoff;
    j["grid_points"] = cfg.grid_points;
    j["window"] = cfg.window;
    j["threshold"] = cfg.threshold;
    j["eps_max"] = cfg.eps_max;
    j["eps_steps"] = cfg.eps_steps;
    j["n_angles"] = cfg.n_angles;
    j["eta"] = cfg.eta;
    j["theta"] = cfg.theta;
    j["targets"] = cfg.targets;
    std::vector<std::string> names;
    for (MatchFamily f : cfg.families) names.emplace_back(family_name(f));
    j["families"] = names;
    j["out_dir"] = cfg.out_dir;
    j["format"] = cfg.format;
    return j.dump(2) + "\n";
}

// --- metrics ------------------------------------------------------------------

PhaseGrid choose_grid(const FockVector& state, const RunConfig& cfg) {
    const double half_x = marginal_half_width(state, false, cfg.window);
    const double half_p = marginal_half_width(state, true, cfg.window);
    return PhaseGrid::symmetric(half_x, half_p,
                                odd_points_for(half_x, cfg.window, cfg.grid_points),
                                odd_points_for(half_p, cfg.window, cfg.grid_points));
}

StateMetrics compute_metrics(const FockVector& state, const RunConfig& cfg) {
    StateMetrics m;
    m.grid = choose_grid(state, cfg);
    const NegativityResult neg = integrated_negativity(wigner_field(state, m.grid));
    m.mean_photon = mean_photon(state);
    m.parity = parity_expectation(state);
    m.w_origin = wigner_at_origin(state);
    m.delta = neg.delta;
    m.delta_per_n = m.mean_photon > 1e-9 ? neg.delta / m.mean_photon : 0.0;
    m.norm_integral = neg.norm_integral;
    m.window_limited = neg.window_limited;
    m.var_x = quadrature_variance(state, 0.0);
    m.var_p = quadrature_variance(state, 0.5 * std::numbers::pi);
    return m;
}

// --- landscape ----------------------------------------------------------------

std::vector<PanelRecord> landscape_snapshot(const RunConfig& cfg, double r_db,
                                            double cat_alpha) {
    std::vector<std::pair<std::string, StateSpec>> panels;
    {
        StateSpec s;
        s.family = Family::SqueezedFock;
        s.r_db = r_db;
        s.theta = cfg.theta;
        s.n = 0;
        s.cutoff = cfg.cutoff;
        panels.emplace_back("squeezed_vacuum", s);
        s.family = Family::SubtractedSqueezed;
        s.k = 1;
        panels.emplace_back("subtracted_1", s);
        s.k = 2;
        panels.emplace_back("subtracted_2", s);
        StateSpec f;
        f.family = Family::Fock;
        f.cutoff = cfg.cutoff;
        f.n = 1;
        panels.emplace_back("fock_1", f);
        f.n = 2;
        panels.emplace_back("fock_2", f);
        StateSpec c;
        c.family = Family::OddCat;
        c.alpha = cat_alpha;
        c.cutoff = cfg.cutoff;
        panels.emplace_back("odd_cat", c);
    }

    std::vector<PanelRecord> records(panels.size());
    parallel_for(panels.size(), [&](std::size_t i) {
        PanelRecord& rec = records[i];
        rec.label = panels[i].first;
        const FockVector state = build_state_auto(panels[i].second);
        rec.spec = with_cutoff(panels[i].second, state.cutoff());
        rec.metrics = compute_metrics(state, cfg);
        rec.field = wigner_field(state, rec.metrics.grid);
    });
    return records;
}

// --- sweeps -------------------------------------------------------------------

namespace {

struct SweepJob {
    MatchFamily family;
    double target;
};

std::vector<SweepJob> sweep_jobs(const RunConfig& cfg) {
    std::vector<SweepJob> jobs;
    for (MatchFamily f : cfg.families)
        for (double t : cfg.targets) jobs.push_back({f, t});
    return jobs;
}

// Solve + build at an automatically grown cutoff; infeasible targets yield
// a record with the reason and no state.
bool realize(const SweepJob& job, const RunConfig& cfg, MatchSolution& solution,
             FockVector& state, int& cutoff_used) {
    solution = solve_family(job.family, job.target, cfg.cutoff);
    if (!solution.feasible) return false;
    state = build_state_auto(matched_spec(solution, cfg.theta, cfg.cutoff));
    cutoff_used = state.cutoff();
    return true;
}

} // namespace

std::vector<ScalarRecord> scalar_sweep(const RunConfig& cfg) {
    const std::vector<SweepJob> jobs = sweep_jobs(cfg);
    std::vector<ScalarRecord> records(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        ScalarRecord& rec = records[i];
        FockVector state;
        if (realize(jobs[i], cfg, rec.solution, state, rec.cutoff_used))
            rec.metrics = compute_metrics(state, cfg);
    });
    return records;
}

std::vector<RadiiRecord> radii_sweep(const RunConfig& cfg) {
    const std::vector<SweepJob> jobs = sweep_jobs(cfg);
    std::vector<RadiiRecord> records(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        RadiiRecord& rec = records[i];
        FockVector state;
        if (!realize(jobs[i], cfg, rec.solution, state, rec.cutoff_used)) return;
        const auto axes = axis_radii(state, cfg.threshold, cfg.eps_max, cfg.eps_steps);
        rec.r_x = axes.first;
        rec.r_p = axes.second;
        rec.shape = contour_shape(
            polar_contour(state, cfg.n_angles, cfg.threshold, cfg.eps_max, cfg.eps_steps));
    });
    return records;
}

PolarReport polar_report(const RunConfig& cfg, double target_n) {
    PolarReport report;
    report.target_n = target_n;
    report.families.resize(cfg.families.size());
    parallel_for(cfg.families.size(), [&](std::size_t i) {
        PolarFamily& pf = report.families[i];
        FockVector state;
        if (!realize({cfg.families[i], target_n}, cfg, pf.solution, state, pf.cutoff_used))
            return;
        pf.contour =
            polar_contour(state, cfg.n_angles, cfg.threshold, cfg.eps_max, cfg.eps_steps);
    });

    const PolarFamily* fock = nullptr;
    const PolarFamily* odd_cat = nullptr;
    for (const PolarFamily& pf : report.families) {
        if (!pf.solution.feasible) continue;
        if (pf.solution.family == MatchFamily::Fock) fock = &pf;
        if (pf.solution.family == MatchFamily::OddCat) odd_cat = &pf;
    }
    for (const PolarFamily& pf : report.families) {
        if (!pf.solution.feasible) continue;
        if (fock && pf.solution.family != MatchFamily::Fock) {
            SectorRow row;
            row.test_family = family_name(pf.solution.family);
            row.ref_family = family_name(MatchFamily::Fock);
            row.predicate = "adv";
            row.sector = advantage_sector(pf.contour, fock->contour);
            report.sectors.push_back(row);
        }
        if (odd_cat && pf.solution.family != MatchFamily::OddCat &&
            pf.solution.family != MatchFamily::Fock) {
            SectorRow row;
            row.test_family = family_name(pf.solution.family);
            row.ref_family = family_name(MatchFamily::OddCat);
            row.predicate = "tolerance";
            row.eta = cfg.eta;
            row.sector = tolerance_sector(pf.contour, odd_cat->contour, cfg.eta);
            report.sectors.push_back(row);
        }
    }
    return report;
}

// --- consistency suite ----------------------------------------------------------

std::vector<CheckResult> consistency_suite(const RunConfig& cfg) {
    std::vector<CheckResult> checks;

    {
        CheckResult c;
        c.id = 1;
        c.name = "one_click_equals_squeezed_single_photon";
        const double r = db_to_r(6.0);
        const FockVector parent = make_squeezed_fock(r, cfg.theta, 0, cfg.cutoff);
        const FockVector one_click = subtract_photons(parent, 1);
        const FockVector reference = make_squeezed_fock(r, cfg.theta, 1, cfg.cutoff);
        const double fid = state_fidelity(one_click, reference);
        c.value = 1.0 - fid;
        c.tolerance = 1e-10;
        c.pass = fid >= 1.0 - 1e-10;
        std::ostringstream d;
        d << "fidelity " << format_double(fid) << " at r_db=6";
        c.detail = d.str();
        checks.push_back(c);
    }

    {
        CheckResult c;
        c.id = 2;
        c.name = "negativity_invariant_under_squeezing";
        const std::vector<double> rs = {0.0, 0.3, 0.69078, 1.0, 1.4391};
        std::vector<double> deltas(rs.size());
        std::ostringstream d;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            StateSpec spec;
            spec.family = Family::SqueezedFock;
            spec.r_db = r_to_db(rs[i]);
            spec.theta = cfg.theta;
            spec.n = 1;
            spec.cutoff = cfg.cutoff;
            const FockVector state = build_state_auto(spec);
            const NegativityResult neg =
                integrated_negativity(wigner_field(state, choose_grid(state, cfg)));
            deltas[i] = neg.delta;
            d << "delta(r=" << rs[i] << ")=" << format_double(neg.delta)
              << (neg.window_limited ? " [window]" : "") << "; ";
        }
        const auto [lo, hi] = std::minmax_element(deltas.begin(), deltas.end());
        c.value = *hi - *lo;
        c.tolerance = 6e-3;
        c.pass = c.value <= c.tolerance;
        c.detail = d.str();
        checks.push_back(c);
    }

    {
        CheckResult c;
        c.id = 3;
        c.name = "fock_isotropy";
        double worst = 1.0;
        bool bounded = false;
        std::ostringstream d;
        for (int n : {1, 2}) {
            const ContourShape shape = contour_shape(
                polar_contour(make_fock(n, cfg.cutoff), cfg.n_angles, cfg.threshold,
                              cfg.eps_max, cfg.eps_steps));
            worst = std::max(worst, shape.ratio);
            bounded = bounded || !shape.defined;
            d << "ratio(|" << n << ">)=" << format_double(shape.ratio) << "; ";
        }
        c.value = worst - 1.0;
        c.tolerance = 1e-3;
        c.pass = c.value <= c.tolerance && !bounded;
        if (bounded) d << "lower-bounded directions present; ";
        c.detail = d.str();
        checks.push_back(c);
    }

    {
        CheckResult c;
        c.id = 4;
        c.name = "cat_contours_converge";
        const std::vector<double> targets = {2.0, 3.0, 4.0};
        std::vector<double> gaps;
        std::ostringstream d;
        bool all_feasible = true;
        for (double t : targets) {
            const MatchSolution even = solve_cat_alpha(CatParity::Even, t);
            const MatchSolution odd = solve_cat_alpha(CatParity::Odd, t);
            if (!even.feasible || !odd.feasible) {
                all_feasible = false;
                break;
            }
            const FockVector se = build_state_auto(matched_spec(even, cfg.theta, cfg.cutoff));
            const FockVector so = build_state_auto(matched_spec(odd, cfg.theta, cfg.cutoff));
            const PolarContour ce =
                polar_contour(se, cfg.n_angles, cfg.threshold, cfg.eps_max, cfg.eps_steps);
            const PolarContour co =
                polar_contour(so, cfg.n_angles, cfg.threshold, cfg.eps_max, cfg.eps_steps);
            double gap = 0.0;
            for (std::size_t i = 0; i < ce.radii.size(); ++i) {
                const double re = ce.radii[i].radius;
                const double ro = co.radii[i].radius;
                gap = std::max(gap, 2.0 * std::abs(re - ro) / (re + ro));
            }
            gaps.push_back(gap);
            d << "gap(n=" << t << ")=" << format_double(gap) << "; ";
        }
        c.tolerance = 0.01;
        if (all_feasible && gaps.size() == targets.size()) {
            c.value = gaps.back();
            c.pass = gaps[0] > gaps[1] && gaps[1] > gaps[2] && gaps.back() <= c.tolerance;
        } else {
            c.value = 1.0;
            c.pass = false;
            d << "infeasible cat target; ";
        }
        c.detail = d.str();
        checks.push_back(c);
    }

    return checks;
}

// --- output -------------------------------------------------------------------

std::vector<std::string> write_landscape(const std::vector<PanelRecord>& panels,
                                         const RunConfig& cfg) {
    std::vector<std::string> written;
    std::ostringstream csv;
    csv << "panel,spec,mean_photon,w_origin,delta,delta_per_n,norm_integral,window_limited,"
           "cutoff,n_x,n_p,window_x,window_p,field_csv\n";
    for (const PanelRecord& rec : panels) {
        const std::string field_csv = "landscape_" + rec.label + ".csv";
        const std::string field_json = "landscape_" + rec.label + ".json";
        write_wigner_csv(rec.field, out_path(cfg, field_csv));
        write_wigner_envelope(rec.field, field_csv, format(rec.spec),
                              out_path(cfg, field_json));
        written.push_back(field_csv);
        written.push_back(field_json);
        const StateMetrics& m = rec.metrics;
        csv << rec.label << ",\"" << format(rec.spec) << "\"," << format_double(m.mean_photon)
            << ',' << format_double(m.w_origin) << ',' << format_double(m.delta) << ','
            << format_double(m.delta_per_n) << ',' << format_double(m.norm_integral) << ','
            << csv_bool(m.window_limited) << ',' << rec.spec.cutoff << ',' << m.grid.n_x << ','
            << m.grid.n_p << ',' << format_double(m.grid.x_max) << ','
            << format_double(m.grid.p_max) << ',' << field_csv << '\n';
    }
    write_text_file(out_path(cfg, "landscape.csv"), csv.str());
    written.insert(written.begin(), "landscape.csv");
    return written;
}

std::vector<std::string> write_scalar_csv(const std::vector<ScalarRecord>& records,
                                          const RunConfig& cfg) {
    std::ostringstream csv;
    csv << match_csv_header()
        << ",mean_photon,w_origin,delta,delta_per_n,norm_integral,window_limited,cutoff,n_x,"
           "n_p,window_x,window_p,threshold,eps_max,eps_steps\n";
    for (const ScalarRecord& rec : records) {
        csv << solution_prefix(rec.solution) << ',';
        if (rec.solution.feasible) {
            const StateMetrics& m = rec.metrics;
            csv << format_double(m.mean_photon) << ',' << format_double(m.w_origin) << ','
                << format_double(m.delta) << ',' << format_double(m.delta_per_n) << ','
                << format_double(m.norm_integral) << ',' << csv_bool(m.window_limited) << ','
                << rec.cutoff_used << ',' << m.grid.n_x << ',' << m.grid.n_p << ','
                << format_double(m.grid.x_max) << ',' << format_double(m.grid.p_max);
        } else {
            csv << ",,,,,,,,,,";
        }
        csv << ',' << format_double(cfg.threshold) << ',' << format_double(cfg.eps_max) << ','
            << cfg.eps_steps << '\n';
    }
    write_text_file(out_path(cfg, "scalar_sweep.csv"), csv.str());
    return {"scalar_sweep.csv"};
}

std::vector<std::string> write_radii_csv(const std::vector<RadiiRecord>& records,
                                         const RunConfig& cfg) {
    std::ostringstream csv;
    csv << match_csv_header()
        << ",R_x,R_x_lower_bound,R_p,R_p_lower_bound,R_max,R_min,anisotropy,"
           "anisotropy_defined,threshold,eps_max,eps_steps,n_angles,cutoff\n";
    for (const RadiiRecord& rec : records) {
        csv << solution_prefix(rec.solution) << ',';
        if (rec.solution.feasible) {
            csv << format_double(rec.r_x.radius) << ',' << csv_bool(rec.r_x.is_lower_bound)
                << ',' << format_double(rec.r_p.radius) << ','
                << csv_bool(rec.r_p.is_lower_bound) << ',' << format_double(rec.shape.r_max)
                << ',' << format_double(rec.shape.r_min) << ','
                << format_double(rec.shape.ratio) << ',' << csv_bool(rec.shape.defined) << ','
                << format_double(cfg.threshold) << ',' << format_double(cfg.eps_max) << ','
                << cfg.eps_steps << ',' << cfg.n_angles << ',' << rec.cutoff_used;
        } else {
            csv << ",,,,,,,," << format_double(cfg.threshold) << ','
                << format_double(cfg.eps_max) << ',' << cfg.eps_steps << ',' << cfg.n_angles
                << ',';
        }
        csv << '\n';
    }
    write_text_file(out_path(cfg, "radii_sweep.csv"), csv.str());
    return {"radii_sweep.csv"};
}

std::vector<std::string> write_polar(const PolarReport& report, const RunConfig& cfg) {
    std::ostringstream csv;
    csv << "family,target_n,parameter,phi,radius,is_lower_bound,threshold,eps_max,eps_steps,"
           "cutoff\n";
    for (const PolarFamily& pf : report.families) {
        if (!pf.solution.feasible) continue;
        for (std::size_t i = 0; i < pf.contour.angles.size(); ++i) {
            csv << family_name(pf.solution.family) << ',' << format_double(report.target_n)
                << ',' << format_double(pf.solution.parameter) << ','
                << format_double(pf.contour.angles[i]) << ','
                << format_double(pf.contour.radii[i].radius) << ','
                << csv_bool(pf.contour.radii[i].is_lower_bound) << ','
                << format_double(cfg.threshold) << ',' << format_double(cfg.eps_max) << ','
                << cfg.eps_steps << ',' << pf.cutoff_used << '\n';
        }
    }
    write_text_file(out_path(cfg, "polar.csv"), csv.str());

    std::ostringstream sectors;
    sectors << "test_family,ref_family,predicate,eta,measure_rad,bins,total_bins,bin_width\n";
    for (const SectorRow& row : report.sectors) {
        sectors << row.test_family << ',' << row.ref_family << ',' << row.predicate << ','
                << format_double(row.eta) << ',' << format_double(row.sector.measure) << ','
                << row.sector.bins << ',' << row.sector.total_bins << ','
                << format_double(row.sector.bin_width) << '\n';
    }
    write_text_file(out_path(cfg, "sectors.csv"), sectors.str());
    return {"polar.csv", "sectors.csv"};
}

std::vector<std::string> write_consistency(const std::vector<CheckResult>& checks,
                                           const RunConfig& cfg) {
    std::ostringstream csv;
    csv << "id,name,value,tolerance,pass,detail\n";
    for (const CheckResult& c : checks)
        csv << c.id << ',' << c.name << ',' << format_double(c.value) << ','
            << format_double(c.tolerance) << ',' << csv_bool(c.pass) << ",\"" << c.detail
            << "\"\n";
    write_text_file(out_path(cfg, "consistency.csv"), csv.str());
    return {"consistency.csv"};
}

void write_run_manifest(const RunConfig& cfg, const std::string& command,
                        const std::vector<std::string>& outputs) {
    json j = json::parse(config_to_json(cfg));
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["outputs"] = outputs;
    j["convention"] = {{"commutator", "[x,p]=i"}, {"alpha", "(x+ip)/sqrt(2)"},
                       {"squeeze_db", "r = ln(10)/20 * r_db"}};
    write_text_file(out_path(cfg, "run.json"), j.dump(2) + "\n");
}

} // namespace cvbench
