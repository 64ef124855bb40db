#ifndef CVBENCH_FOCK_HPP
#define CVBENCH_FOCK_HPP

#include <complex>
#include <utility>
#include <vector>

#include "cvbench/errors.hpp"

namespace cvbench {

using cdouble = std::complex<double>;

// Conventions used throughout:
//   [a, a†] = 1,  x = (a + a†)/√2,  p = (a − a†)/(i√2),  [x, p] = i.
// The displacement amplitude α maps to quadrature means via
//   α = (x₀ + i p₀)/√2,
// i.e. D(α) shifts ⟨x⟩ by √2·Re α and ⟨p⟩ by √2·Im α.

constexpr double kTailGuard = 1e-8;   // max |c_N|² + |c_{N−1}|² accepted downstream
constexpr double kNormTol = 1e-12;
constexpr int kWorkingMargin = 16;    // extra levels used during construction

// dB ↔ squeeze-magnitude conversion, r = (ln 10 / 20)·r_dB.
double db_to_r(double r_db);
double r_to_db(double r);

// 12.5 dB squeezing cap expressed as a magnitude.
double squeeze_cap_r();
constexpr double kSqueezeCapDb = 12.5;

struct SqueezeParams {
    double r = 0.0;      // magnitude, r ≥ 0 and within the 12.5 dB cap
    double theta = 0.0;  // phase in [0, 2π)

    SqueezeParams() = default;
    SqueezeParams(double r_, double theta_);
};

// Normalized pure state over number states 0..cutoff.
struct FockVector {
    std::vector<cdouble> amplitudes;  // index = photon number

    int cutoff() const { return static_cast<int>(amplitudes.size()) - 1; }
    double norm() const;
    double tail_mass() const;  // |c_N|² + |c_{N−1}|²
};

// Throws truncation_error when tail_mass() ≥ kTailGuard.
void require_tail_health(const FockVector& state, const char* where);

// Scales to unit norm; throws domain_error on a (near-)zero vector.
FockVector normalized(FockVector state);

// Rotates the global phase so the lowest-index non-negligible amplitude is
// real and positive.
FockVector phase_fixed(FockVector state);

// --- constructors -----------------------------------------------------------

FockVector make_fock(int n, int cutoff);
FockVector make_coherent(cdouble alpha, int cutoff);

enum class CatParity { Even, Odd };
FockVector make_cat(cdouble alpha, CatParity parity, int cutoff);

// S(r,θ)|n⟩, built by exponentiating the quadratic generator at a working
// cutoff and truncating back.
FockVector make_squeezed_fock(double r, double theta, int n, int cutoff);

// --- unitaries and photon subtraction ---------------------------------------

// S(r,θ) = exp[(r/2)(e^{−iθ}a² − e^{iθ}a†²)] applied in the truncated basis.
FockVector apply_squeeze(const FockVector& state, const SqueezeParams& params);

// D(α) = exp(α a† − α* a) applied in the truncated basis.
FockVector apply_displacement(const FockVector& state, cdouble alpha);

// Lowering operator with heralding weight: returns the normalized state and
// the pre-normalization norm ‖a ψ‖. Throws domain_error when a annihilates
// the state (residual below 1e−12).
std::pair<FockVector, double> annihilate(const FockVector& state);

// k-fold photon subtraction, k ∈ {1, 2}.
FockVector subtract_photons(const FockVector& state, int k);

// --- scalar diagnostics ------------------------------------------------------

double mean_photon(const FockVector& state);
double parity_expectation(const FockVector& state);

// Variance of x_φ = x cos φ + p sin φ from ladder-operator moments.
double quadrature_variance(const FockVector& state, double phi);

cdouble overlap(const FockVector& a, const FockVector& b);   // ⟨a|b⟩
double state_fidelity(const FockVector& a, const FockVector& b);  // |⟨a|b⟩|²

// ⟨ψ|D(α)|ψ⟩ evaluated with exact displacement matrix elements of the
// truncated state (no operator exponential, stable for any α).
cdouble displacement_overlap(const FockVector& state, cdouble alpha);

} // namespace cvbench

#endif
