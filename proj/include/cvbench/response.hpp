#ifndef CVBENCH_RESPONSE_HPP
#define CVBENCH_RESPONSE_HPP

#include <utility>
#include <vector>

#include "cvbench/fock.hpp"

namespace cvbench {

// ε-scan defaults; the 0.90 threshold and these scan settings are shared by
// every family so radii differences reflect state response alone.
constexpr double kDefaultThreshold = 0.90;
constexpr double kDefaultEpsMax = 2.0;
constexpr int kDefaultEpsSteps = 201;
constexpr int kDefaultAngles = 72;

// F(ε e^{iφ}) sampled on a uniform ε grid starting at 0.
struct FidelityScan {
    double phi = 0.0;
    std::vector<double> epsilons;
    std::vector<double> fidelities;
};

struct RadiusResult {
    double radius = 0.0;
    bool is_lower_bound = false;  // scan never crossed; radius equals eps_max
    double threshold = kDefaultThreshold;
};

struct PolarContour {
    std::vector<double> angles;        // uniform in [0, 2π)
    std::vector<RadiusResult> radii;
};

struct ContourShape {
    double r_max = 0.0, r_min = 0.0;
    double ratio = 1.0;      // R_max / R_min
    bool defined = false;    // false when any direction is only a lower bound
};

// Angular measure of a predicate over contour bins, with ±1 bin resolution.
struct SectorResult {
    double measure = 0.0;   // radians
    int bins = 0;
    int total_bins = 0;
    double bin_width = 0.0;
};

// |⟨ψ|D(α)|ψ⟩|², exact for the truncated state.
double displacement_fidelity(const FockVector& state, cdouble alpha);

FidelityScan fidelity_scan(const FockVector& state, double phi, double eps_max, int steps);

// First downward crossing of the threshold, linearly interpolated; fidelity
// revivals beyond the first crossing are ignored.
RadiusResult threshold_radius(const FidelityScan& scan, double threshold);

std::pair<RadiusResult, RadiusResult> axis_radii(const FockVector& state,
                                                 double threshold = kDefaultThreshold,
                                                 double eps_max = kDefaultEpsMax,
                                                 int steps = kDefaultEpsSteps);

PolarContour polar_contour(const FockVector& state, int n_angles = kDefaultAngles,
                           double threshold = kDefaultThreshold,
                           double eps_max = kDefaultEpsMax, int steps = kDefaultEpsSteps);

ContourShape contour_shape(const PolarContour& contour);

// Least-squares slope of (1 − F) against ε² over ε ≤ 0.02; matches
// 2·Var(x_{φ+π/2}) for the state under the fixed α convention.
double small_displacement_slope(const FockVector& state, double phi);

// Angular measure where R_test(φ) > R_ref(φ).
SectorResult advantage_sector(const PolarContour& test, const PolarContour& ref);

// Angular measure where R_test(φ) >= η·R_ref(φ), 0 < η < 1.
SectorResult tolerance_sector(const PolarContour& test, const PolarContour& ref, double eta);

// CSV exports (`phi,epsilon,fidelity` / `phi,radius,is_lower_bound`) and a
// JSON envelope carrying threshold and convention metadata.
void write_scan_csv(const FidelityScan& scan, const std::string& path);
void write_contour_csv(const PolarContour& contour, const std::string& path);
void write_contour_envelope(const PolarContour& contour, double threshold,
                            const std::string& csv_name, const std::string& state_label,
                            const std::string& path);

} // namespace cvbench

#endif
