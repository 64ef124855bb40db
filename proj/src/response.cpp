#include "cvbench/response.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cvbench/parallel.hpp"
#include "cvbench/state_spec.hpp"

namespace cvbench {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_angles(const PolarContour& a, const PolarContour& b) {
    if (a.angles.size() != b.angles.size())
        throw domain_error("sector: contours have different angle sets");
    for (std::size_t i = 0; i < a.angles.size(); ++i)
        if (std::abs(a.angles[i] - b.angles[i]) > 1e-12)
            throw domain_error("sector: contours have different angle sets");
    if (a.radii.size() != a.angles.size() || b.radii.size() != b.angles.size())
        throw domain_error("sector: malformed contour");
}

SectorResult count_sector(const PolarContour& test, const PolarContour& ref,
                          bool (*pred)(double, double, double), double eta) {
    require_same_angles(test, ref);
    SectorResult out;
    out.total_bins = static_cast<int>(test.angles.size());
    out.bin_width = kTwoPi / out.total_bins;
    for (std::size_t i = 0; i < test.radii.size(); ++i)
        if (pred(test.radii[i].radius, ref.radii[i].radius, eta)) ++out.bins;
    out.measure = out.bins * out.bin_width;
    return out;
}

} // namespace

double displacement_fidelity(const FockVector& state, cdouble alpha) {
    require_tail_health(state, "displacement_fidelity");
    return std::norm(displacement_overlap(state, alpha));
}

FidelityScan fidelity_scan(const FockVector& state, double phi, double eps_max, int steps) {
    if (steps < 32) throw domain_error("fidelity_scan: steps must be >= 32");
    if (!(eps_max > 0.0)) throw domain_error("fidelity_scan: eps_max must be positive");
    require_tail_health(state, "fidelity_scan");

    FidelityScan scan;
    scan.phi = phi;
    scan.epsilons.resize(steps);
    scan.fidelities.resize(steps);
    const cdouble direction = std::exp(cdouble(0.0, phi));
    for (int i = 0; i < steps; ++i) scan.epsilons[i] = eps_max * double(i) / double(steps - 1);
    scan.fidelities[0] = 1.0;
    parallel_for(static_cast<std::size_t>(steps - 1), [&](std::size_t j) {
        const int i = static_cast<int>(j) + 1;
        scan.fidelities[i] = std::norm(displacement_overlap(state, scan.epsilons[i] * direction));
    });
    return scan;
}

RadiusResult threshold_radius(const FidelityScan& scan, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw domain_error("threshold_radius: threshold must be in (0,1)");
    if (scan.epsilons.size() < 2 || scan.epsilons.size() != scan.fidelities.size())
        throw domain_error("threshold_radius: malformed scan");

    RadiusResult result;
    result.threshold = threshold;
    for (std::size_t i = 1; i < scan.fidelities.size(); ++i) {
        if (scan.fidelities[i] < threshold) {
            const double f0 = scan.fidelities[i - 1];
            const double f1 = scan.fidelities[i];
            const double e0 = scan.epsilons[i - 1];
            const double e1 = scan.epsilons[i];
            result.radius = e0 + (f0 - threshold) / (f0 - f1) * (e1 - e0);
            return result;
        }
    }
    result.radius = scan.epsilons.back();
    result.is_lower_bound = true;
    return result;
}

std::pair<RadiusResult, RadiusResult> axis_radii(const FockVector& state, double threshold,
                                                 double eps_max, int steps) {
    const RadiusResult rx = threshold_radius(fidelity_scan(state, 0.0, eps_max, steps), threshold);
    const RadiusResult rp =
        threshold_radius(fidelity_scan(state, 0.5 * std::numbers::pi, eps_max, steps), threshold);
    return {rx, rp};
}

PolarContour polar_contour(const FockVector& state, int n_angles, double threshold,
                           double eps_max, int steps) {
    if (n_angles < 8) throw domain_error("polar_contour: n_angles must be >= 8");
    require_tail_health(state, "polar_contour");

    PolarContour contour;
    contour.angles.resize(n_angles);
    contour.radii.resize(n_angles);
    for (int i = 0; i < n_angles; ++i) contour.angles[i] = kTwoPi * double(i) / double(n_angles);
    parallel_for(static_cast<std::size_t>(n_angles), [&](std::size_t i) {
        const FidelityScan scan = fidelity_scan(state, contour.angles[i], eps_max, steps);
        contour.radii[i] = threshold_radius(scan, threshold);
    });
    return contour;
}

ContourShape contour_shape(const PolarContour& contour) {
    if (contour.radii.empty()) throw domain_error("contour_shape: empty contour");
    ContourShape shape;
    shape.defined = true;
    shape.r_max = 0.0;
    shape.r_min = contour.radii.front().radius;
    for (const RadiusResult& r : contour.radii) {
        if (r.is_lower_bound) shape.defined = false;
        shape.r_max = std::max(shape.r_max, r.radius);
        shape.r_min = std::min(shape.r_min, r.radius);
    }
    shape.ratio = shape.r_min > 0.0 ? shape.r_max / shape.r_min : 0.0;
    return shape;
}

double small_displacement_slope(const FockVector& state, double phi) {
    require_tail_health(state, "small_displacement_slope");
    const int points = 8;
    const double eps_top = 0.02;
    const cdouble direction = std::exp(cdouble(0.0, phi));
    double sxy = 0.0, sxx = 0.0;  // OLS through the origin of (1−F) vs ε²
    for (int j = 1; j <= points; ++j) {
        const double eps = eps_top * double(j) / double(points);
        const double one_minus_f =
            1.0 - std::norm(displacement_overlap(state, eps * direction));
        const double e2 = eps * eps;
        sxy += one_minus_f * e2;
        sxx += e2 * e2;
    }
    return sxy / sxx;
}

SectorResult advantage_sector(const PolarContour& test, const PolarContour& ref) {
    return count_sector(test, ref, [](double t, double r, double) { return t > r; }, 0.0);
}

SectorResult tolerance_sector(const PolarContour& test, const PolarContour& ref, double eta) {
    if (!(eta > 0.0 && eta < 1.0))
        throw domain_error("tolerance_sector: eta must be in (0,1)");
    return count_sector(test, ref, [](double t, double r, double e) { return t >= e * r; }, eta);
}

namespace {

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << body;
}

} // namespace

void write_scan_csv(const FidelityScan& scan, const std::string& path) {
    std::ostringstream out;
    out << "phi,epsilon,fidelity\n";
    for (std::size_t i = 0; i < scan.epsilons.size(); ++i)
        out << format_double(scan.phi) << ',' << format_double(scan.epsilons[i]) << ','
            << format_double(scan.fidelities[i]) << '\n';
    write_text_file(path, out.str());
}

void write_contour_csv(const PolarContour& contour, const std::string& path) {
    std::ostringstream out;
    out << "phi,radius,is_lower_bound\n";
    for (std::size_t i = 0; i < contour.angles.size(); ++i)
        out << format_double(contour.angles[i]) << ','
            << format_double(contour.radii[i].radius) << ','
            << (contour.radii[i].is_lower_bound ? "true" : "false") << '\n';
    write_text_file(path, out.str());
}

void write_contour_envelope(const PolarContour& contour, double threshold,
                            const std::string& csv_name, const std::string& state_label,
                            const std::string& path) {
    nlohmann::json env;
    env["kind"] = "polar_contour";
    env["csv"] = csv_name;
    env["state"] = state_label;
    env["threshold"] = threshold;
    env["n_angles"] = contour.angles.size();
    env["convention"] = {{"commutator", "[x,p]=i"},
                         {"alpha", "(x+ip)/sqrt(2)"},
                         {"phi", "measured from the +x axis"}};
    write_text_file(path, env.dump(2) + "\n");
}

} // namespace cvbench
