#ifndef CVBENCH_WIGNER_HPP
#define CVBENCH_WIGNER_HPP

#include <string>
#include <vector>

#include "cvbench/fock.hpp"
#include "cvbench/state_spec.hpp"

namespace cvbench {

// Uniform rectangular phase-space grid. Counts are odd and the window is
// symmetric about zero, so the exact origin is always a sample.
struct PhaseGrid {
    double x_min = -7.0, x_max = 7.0;
    double p_min = -7.0, p_max = 7.0;
    int n_x = 201, n_p = 201;

    static PhaseGrid symmetric(double half_x, double half_p, int n_x, int n_p);
    static PhaseGrid square(double half_width = 7.0, int points = 201);

    double dx() const { return (x_max - x_min) / (n_x - 1); }
    double dp() const { return (p_max - p_min) / (n_p - 1); }
    double x(int i) const { return x_min + i * dx(); }
    double p(int j) const { return p_min + j * dp(); }
    void validate() const;
};

// W(x,p) samples, row-major with the x index outermost.
struct WignerField {
    PhaseGrid grid;
    std::vector<double> values;

    double at(int ix, int ip) const { return values[std::size_t(ix) * grid.n_p + ip]; }
};

// Accepted band for the window-coverage check on ∫W dx dp.
constexpr double kWindowNormLow = 0.995;
constexpr double kWindowNormHigh = 1.005;

// Primary evaluation: the displaced-parity form
//   W(x,p) = (1/π) Σ_k (−1)^k |⟨k|D†(α)|ψ⟩|²,  α = (x+ip)/√2,
// with the k-sum carried out in closed form (associated-Laguerre kernel of
// the truncated state), so no parity tail is lost for any α.
WignerField wigner_field(const FockVector& state, const PhaseGrid& grid);

// Independent oracle route: position wavefunction from harmonic-oscillator
// eigenfunctions, then the transform W = (1/π)∫ψ*(x+y)ψ(x−y)e^{2ipy}dy.
WignerField wigner_field_wavefunction(const FockVector& state, const PhaseGrid& grid);

// W(0,0) = ⟨(−1)^n⟩/π, no grid involved.
double wigner_at_origin(const FockVector& state);

// 2D trapezoidal integral of the sampled field.
double normalization_integral(const WignerField& field);

struct NegativityResult {
    double delta = 0.0;          // (∫|W| − 1)/2, clamped at 0
    double norm_integral = 0.0;  // ∫W over the window
    bool window_limited = false; // norm_integral outside [0.995, 1.005]
};

NegativityResult integrated_negativity(const WignerField& field);

struct ProbeSettings {
    int cutoff = 80;
    PhaseGrid grid;
};

struct ConvergenceReport {
    double delta_base = 0.0, delta_refined = 0.0;
    double per_n_base = 0.0, per_n_refined = 0.0;
    double delta_change = 0.0;   // |Δδ|
    double per_n_change = 0.0;   // |Δ(δ/⟨n⟩)|
    bool window_limited = false;
};

// Re-evaluates δ and δ/⟨n⟩ for the same recipe under strictly finer/larger
// numerical settings and reports the drift.
ConvergenceReport convergence_probe(const StateSpec& spec, const ProbeSettings& base,
                                    const ProbeSettings& refined);

// CSV (`x,p,w` in row-major grid order) plus a JSON envelope carrying the
// grid metadata; both use 17-significant-digit decimals.
void write_wigner_csv(const WignerField& field, const std::string& path);
void write_wigner_envelope(const WignerField& field, const std::string& csv_name,
                           const std::string& state_label, const std::string& path);

} // namespace cvbench

#endif
