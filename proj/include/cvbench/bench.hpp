#ifndef CVBENCH_BENCH_HPP
#define CVBENCH_BENCH_HPP

#include <string>
#include <vector>

#include "cvbench/fock.hpp"
#include "cvbench/matching.hpp"
#include "cvbench/response.hpp"
#include "cvbench/state_spec.hpp"
#include "cvbench/wigner.hpp"

namespace cvbench {

// Baseline numerical settings: Fock cutoff 80, 201 points per axis on
// [−7,7]², fidelity threshold 0.90, ε scans of 201 points on [0,2].
struct RunConfig {
    int cutoff = 80;
    int grid_points = 201;
    double window = 7.0;
    double threshold = kDefaultThreshold;
    double eps_max = kDefaultEpsMax;
    int eps_steps = kDefaultEpsSteps;
    int n_angles = kDefaultAngles;
    double eta = 0.9;     // tolerance-sector factor
    double theta = 0.0;   // squeeze phase for all squeezed families
    std::vector<double> targets = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
    std::vector<MatchFamily> families = all_families();
    std::string out_dir = "out";
    std::string format = "json";  // json | csv for single-value commands
};

// Reads any RunConfig keys present in a JSON file (unknown keys ignored, so
// a previous run.json can be fed back directly).
RunConfig config_from_json_file(const std::string& path);
void apply_config_json(RunConfig& cfg, const std::string& json_text);
std::string config_to_json(const RunConfig& cfg);

// Grid selection: keeps the configured window and spacing, enlarging either
// axis until the state's marginal mass outside the window is negligible
// (squeezed states at the cap need far more than the default ±7 along the
// anti-squeezed axis).
PhaseGrid choose_grid(const FockVector& state, const RunConfig& cfg);

struct StateMetrics {
    double mean_photon = 0.0;
    double parity = 0.0;
    double w_origin = 0.0;
    double delta = 0.0;
    double delta_per_n = 0.0;
    double norm_integral = 0.0;
    double var_x = 0.0, var_p = 0.0;
    bool window_limited = false;
    PhaseGrid grid;
};

StateMetrics compute_metrics(const FockVector& state, const RunConfig& cfg);

// --- experiments --------------------------------------------------------------

struct PanelRecord {
    std::string label;
    StateSpec spec;        // as built (cutoff included)
    StateMetrics metrics;
    WignerField field;
};

// The six-panel landscape: S(r)|0⟩, aS(r)|0⟩, a²S(r)|0⟩ at r_dB = 6, the
// Fock references |1⟩ and |2⟩, and the odd cat at α = 1.6.
std::vector<PanelRecord> landscape_snapshot(const RunConfig& cfg, double r_db = 6.0,
                                            double cat_alpha = 1.6);

struct ScalarRecord {
    MatchSolution solution;
    StateMetrics metrics;  // populated when feasible
    int cutoff_used = 0;
};

std::vector<ScalarRecord> scalar_sweep(const RunConfig& cfg);

struct RadiiRecord {
    MatchSolution solution;
    RadiusResult r_x, r_p;
    ContourShape shape;
    int cutoff_used = 0;
};

std::vector<RadiiRecord> radii_sweep(const RunConfig& cfg);

struct PolarFamily {
    MatchSolution solution;
    PolarContour contour;  // populated when feasible
    int cutoff_used = 0;
};

struct SectorRow {
    std::string test_family;
    std::string ref_family;
    std::string predicate;  // "adv" | "tolerance"
    double eta = 0.0;
    SectorResult sector;
};

struct PolarReport {
    double target_n = 0.0;
    std::vector<PolarFamily> families;
    std::vector<SectorRow> sectors;
};

PolarReport polar_report(const RunConfig& cfg, double target_n = 3.0);

struct CheckResult {
    int id = 0;
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

// The four internal consistency checks: subtraction identity, δ invariance
// under squeezing, Fock isotropy, even/odd cat convergence.
std::vector<CheckResult> consistency_suite(const RunConfig& cfg);

// --- output -------------------------------------------------------------------

std::vector<std::string> write_landscape(const std::vector<PanelRecord>& panels,
                                         const RunConfig& cfg);
std::vector<std::string> write_scalar_csv(const std::vector<ScalarRecord>& records,
                                          const RunConfig& cfg);
std::vector<std::string> write_radii_csv(const std::vector<RadiiRecord>& records,
                                         const RunConfig& cfg);
std::vector<std::string> write_polar(const PolarReport& report, const RunConfig& cfg);
std::vector<std::string> write_consistency(const std::vector<CheckResult>& checks,
                                           const RunConfig& cfg);

void write_run_manifest(const RunConfig& cfg, const std::string& command,
                        const std::vector<std::string>& outputs);

extern const char* const kToolName;
extern const char* const kToolVersion;

} // namespace cvbench

#endif
