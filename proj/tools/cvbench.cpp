// cvbench — matched-energy phase-space benchmarking of single-mode optical
// states: Wigner negativity, parity diagnostics, and directional
// displacement-fidelity radii in a truncated number basis.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "cvbench/bench.hpp"

using namespace cvbench;
using nlohmann::json;

namespace {

enum ExitCode {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kDomain = 3,
    kTruncation = 4,
    kIo = 5,
    kWindowWarning = 6,
};

void emit_error(const char* type, const std::string& message) {
    json err;
    err["error"] = {{"type", type}, {"message", message}};
    std::cerr << err.dump() << '\n';
}

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// key/value pairs printed as a JSON object or a two-line CSV table
struct KvReport {
    std::vector<std::pair<std::string, json>> items;

    void add(const std::string& key, json value) { items.emplace_back(key, std::move(value)); }

    void print(const std::string& format) const {
        if (format == "csv") {
            std::string head, row;
            for (const auto& [k, v] : items) {
                if (!head.empty()) {
                    head += ',';
                    row += ',';
                }
                head += k;
                row += csv_escape(v.is_string() ? v.get<std::string>() : v.dump());
            }
            std::cout << head << '\n' << row << '\n';
        } else {
            json obj;
            for (const auto& [k, v] : items) obj[k] = v;
            std::cout << obj.dump(2) << '\n';
        }
    }
};

json metrics_json(const StateMetrics& m) {
    json j;
    j["mean_photon"] = m.mean_photon;
    j["parity"] = m.parity;
    j["w_origin"] = m.w_origin;
    j["delta"] = m.delta;
    j["delta_per_n"] = m.delta_per_n;
    j["norm_integral"] = m.norm_integral;
    j["var_x"] = m.var_x;
    j["var_p"] = m.var_p;
    j["window_limited"] = m.window_limited;
    j["grid"] = {{"n_x", m.grid.n_x}, {"n_p", m.grid.n_p},
                 {"window_x", m.grid.x_max}, {"window_p", m.grid.p_max}};
    return j;
}

std::vector<StateSpec> landscape_specs(const RunConfig& cfg) {
    std::vector<StateSpec> specs;
    StateSpec s;
    s.family = Family::SqueezedFock;
    s.r_db = 6.0;
    s.theta = cfg.theta;
    s.n = 0;
    s.cutoff = cfg.cutoff;
    specs.push_back(s);
    s.family = Family::SubtractedSqueezed;
    s.k = 1;
    specs.push_back(s);
    s.k = 2;
    specs.push_back(s);
    StateSpec f;
    f.family = Family::Fock;
    f.cutoff = cfg.cutoff;
    f.n = 1;
    specs.push_back(f);
    f.n = 2;
    specs.push_back(f);
    StateSpec c;
    c.family = Family::OddCat;
    c.alpha = 1.6;
    c.cutoff = cfg.cutoff;
    specs.push_back(c);
    return specs;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // --config loads first so explicit flags can override its values
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                cfg = config_from_json_file(argv[i + 1]);
            } catch (const std::exception& e) {
                emit_error("parse", e.what());
                return kUsage;
            }
        }
    }

    CLI::App app{"matched-energy phase-space benchmarks for single-mode optical states"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (same schema as run.json)");
    app.add_option("--cutoff", cfg.cutoff, "Fock-space cutoff")->capture_default_str();
    app.add_option("--grid-points", cfg.grid_points, "phase-space samples per axis (odd)")
        ->capture_default_str();
    app.add_option("--window", cfg.window, "phase-space half-width")->capture_default_str();
    app.add_option("--threshold", cfg.threshold, "fidelity threshold F_th")
        ->capture_default_str();
    app.add_option("--eps-max", cfg.eps_max, "displacement-scan upper limit")
        ->capture_default_str();
    app.add_option("--eps-steps", cfg.eps_steps, "displacement-scan samples")
        ->capture_default_str();
    app.add_option("--angles", cfg.n_angles, "polar-contour angle count")->capture_default_str();
    app.add_option("--eta", cfg.eta, "tolerance-sector factor")->capture_default_str();
    app.add_option("--theta", cfg.theta, "squeeze phase (radians)")->capture_default_str();
    app.add_option("--targets", cfg.targets, "matched mean-photon targets")
        ->delimiter(',')
        ->capture_default_str();
    std::vector<std::string> family_names;
    app.add_option("--families", family_names,
                   "families: squeezed_vacuum,subtracted_1,subtracted_2,even_cat,odd_cat,fock")
        ->delimiter(',');
    app.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    app.add_option("--format", cfg.format, "single-value output format: json|csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));

    std::string spec_text;
    auto* cmd_state = app.add_subcommand("state", "build a state and export its amplitudes");
    cmd_state->add_option("spec", spec_text, "state spec, e.g. fock{n=1,cutoff=80}")->required();

    auto* cmd_metrics =
        app.add_subcommand("metrics", "scalar Wigner and quadrature metrics for one state");
    cmd_metrics->add_option("spec", spec_text)->required();

    std::string match_family;
    double target_n = 3.0;
    auto* cmd_match = app.add_subcommand("match", "solve a family parameter for a target <n>");
    cmd_match->add_option("--family", match_family)->required();
    cmd_match->add_option("--target-n", target_n)->required();

    auto* cmd_scalar =
        app.add_subcommand("sweep-scalar", "matched-<n> scalar metrics over all targets");
    auto* cmd_radii =
        app.add_subcommand("sweep-radii", "matched-<n> displacement radii over all targets");

    double polar_target = 3.0;
    auto* cmd_polar = app.add_subcommand("polar", "angular radius contours at one target");
    cmd_polar->add_option("--target-n", polar_target)->capture_default_str();

    double land_rdb = 6.0, land_alpha = 1.6;
    auto* cmd_land = app.add_subcommand("landscape", "six-panel state snapshot with fields");
    cmd_land->add_option("--r-db", land_rdb)->capture_default_str();
    cmd_land->add_option("--cat-alpha", land_alpha)->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "run the internal consistency checks");

    std::string converge_spec;
    int refined_cutoff = 120;
    int refined_points = 301;
    auto* cmd_converge =
        app.add_subcommand("converge", "re-evaluate scalar metrics at refined settings");
    cmd_converge->add_option("--spec", converge_spec,
                             "state spec (default: the six landscape states)");
    cmd_converge->add_option("--refined-cutoff", refined_cutoff)->capture_default_str();
    cmd_converge->add_option("--refined-grid-points", refined_points)->capture_default_str();

    // global flags may appear after the subcommand
    for (CLI::App* sub : {cmd_state, cmd_metrics, cmd_match, cmd_scalar, cmd_radii, cmd_polar,
                          cmd_land, cmd_verify, cmd_converge})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (!family_names.empty()) {
            cfg.families.clear();
            for (const std::string& name : family_names)
                cfg.families.push_back(family_from_name(name));
        }

        if (*cmd_state) {
            const StateSpec spec = parse_state_spec(spec_text);
            const FockVector state = build_state(spec);
            KvReport report;
            report.add("spec", format(spec));
            report.add("cutoff", state.cutoff());
            report.add("mean_photon", mean_photon(state));
            report.add("parity", parity_expectation(state));
            report.add("tail_mass", state.tail_mass());
            if (cfg.format == "csv") {
                report.print("csv");
                std::cout << "n,re,im,prob\n";
                for (int n = 0; n <= state.cutoff(); ++n) {
                    const cdouble a = state.amplitudes[n];
                    std::printf("%d,%s,%s,%s\n", n, format_double(a.real()).c_str(),
                                format_double(a.imag()).c_str(),
                                format_double(std::norm(a)).c_str());
                }
            } else {
                json j;
                for (const auto& [k, v] : report.items) j[k] = v;
                json amps = json::array();
                for (const cdouble& a : state.amplitudes)
                    amps.push_back({a.real(), a.imag()});
                j["amplitudes"] = amps;
                std::cout << j.dump(2) << '\n';
            }
            return kOk;
        }

        if (*cmd_metrics) {
            const StateSpec spec = parse_state_spec(spec_text);
            const FockVector state = build_state(spec);
            const StateMetrics m = compute_metrics(state, cfg);
            KvReport report;
            report.add("spec", format(spec));
            const json mj = metrics_json(m);
            for (const auto& [k, v] : mj.items()) report.add(k, v);
            report.print(cfg.format);
            return m.window_limited ? kWindowWarning : kOk;
        }

        if (*cmd_match) {
            const MatchSolution sol =
                solve_family(family_from_name(match_family), target_n, cfg.cutoff);
            if (cfg.format == "csv") {
                std::cout << match_csv_header() << '\n' << match_csv_row(sol) << '\n';
            } else {
                json j;
                j["family"] = family_name(sol.family);
                j["target_n"] = sol.target_n;
                j["parameter"] = sol.parameter;
                if (sol.family == MatchFamily::SqueezedVacuum ||
                    sol.family == MatchFamily::Subtracted1 ||
                    sol.family == MatchFamily::Subtracted2)
                    j["r_db"] = sol.r_db;
                j["achieved_n"] = sol.achieved_n;
                j["feasible"] = sol.feasible;
                j["reason"] = sol.reason;
                std::cout << j.dump(2) << '\n';
            }
            return sol.feasible ? kOk : kDomain;
        }

        if (*cmd_scalar) {
            const auto records = scalar_sweep(cfg);
            auto outputs = write_scalar_csv(records, cfg);
            write_run_manifest(cfg, "sweep-scalar", outputs);
            std::cout << "wrote " << cfg.out_dir << "/scalar_sweep.csv (" << records.size()
                      << " rows)\n";
            return kOk;
        }

        if (*cmd_radii) {
            const auto records = radii_sweep(cfg);
            auto outputs = write_radii_csv(records, cfg);
            write_run_manifest(cfg, "sweep-radii", outputs);
            std::cout << "wrote " << cfg.out_dir << "/radii_sweep.csv (" << records.size()
                      << " rows)\n";
            return kOk;
        }

        if (*cmd_polar) {
            const PolarReport report = polar_report(cfg, polar_target);
            auto outputs = write_polar(report, cfg);
            write_run_manifest(cfg, "polar", outputs);
            std::cout << "wrote " << cfg.out_dir << "/polar.csv and sectors.csv\n";
            return kOk;
        }

        if (*cmd_land) {
            const auto panels = landscape_snapshot(cfg, land_rdb, land_alpha);
            auto outputs = write_landscape(panels, cfg);
            write_run_manifest(cfg, "landscape", outputs);
            std::cout << "wrote " << cfg.out_dir << "/landscape.csv and " << panels.size()
                      << " field exports\n";
            bool limited = false;
            for (const auto& p : panels) limited = limited || p.metrics.window_limited;
            return limited ? kWindowWarning : kOk;
        }

        if (*cmd_verify) {
            const auto checks = consistency_suite(cfg);
            auto outputs = write_consistency(checks, cfg);
            write_run_manifest(cfg, "verify", outputs);
            bool all_pass = true;
            for (const CheckResult& c : checks) {
                all_pass = all_pass && c.pass;
                std::printf("check %d %-38s %s  value=%.3e tolerance=%.3e\n", c.id,
                            c.name.c_str(), c.pass ? "PASS" : "FAIL", c.value, c.tolerance);
            }
            return all_pass ? kOk : kCheckFailed;
        }

        if (*cmd_converge) {
            std::vector<StateSpec> specs;
            if (converge_spec.empty())
                specs = landscape_specs(cfg);
            else
                specs.push_back(parse_state_spec(converge_spec));

            const ProbeSettings base{cfg.cutoff,
                                     PhaseGrid::square(cfg.window, cfg.grid_points)};
            const ProbeSettings refined{refined_cutoff,
                                        PhaseGrid::square(cfg.window, refined_points)};
            std::ostringstream csv;
            csv << "spec,delta_base,delta_refined,delta_change,per_n_base,per_n_refined,"
                   "per_n_change,window_limited\n";
            double worst_delta = 0.0, worst_per_n = 0.0;
            for (const StateSpec& s : specs) {
                const ConvergenceReport r = convergence_probe(s, base, refined);
                worst_delta = std::max(worst_delta, r.delta_change);
                worst_per_n = std::max(worst_per_n, r.per_n_change);
                csv << csv_escape(format(s)) << ',' << format_double(r.delta_base) << ','
                    << format_double(r.delta_refined) << ',' << format_double(r.delta_change)
                    << ',' << format_double(r.per_n_base) << ','
                    << format_double(r.per_n_refined) << ',' << format_double(r.per_n_change)
                    << ',' << (r.window_limited ? "true" : "false") << '\n';
            }
            std::filesystem::create_directories(cfg.out_dir);
            std::ofstream out(std::filesystem::path(cfg.out_dir) / "convergence.csv",
                              std::ios::binary);
            out << csv.str();
            write_run_manifest(cfg, "converge", {"convergence.csv"});
            std::printf("max |d delta| = %.3e, max |d (delta/<n>)| = %.3e (%zu states)\n",
                        worst_delta, worst_per_n, specs.size());
            return kOk;
        }
    } catch (const parse_error& e) {
        emit_error("parse", e.what());
        return kUsage;
    } catch (const truncation_error& e) {
        emit_error("truncation", e.what());
        return kTruncation;
    } catch (const domain_error& e) {
        emit_error("domain", e.what());
        return kDomain;
    } catch (const std::exception& e) {
        emit_error("io", e.what());
        return kIo;
    }
    return kUsage;
}
