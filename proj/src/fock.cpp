#include "cvbench/fock.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <sstream>

namespace cvbench {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_finite(cdouble z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Unitary action of exp(G) on the state, carried out at cutoff + margin and
// truncated back. G is supplied on the extended dimension.
FockVector apply_generator(const FockVector& state, const Eigen::MatrixXcd& generator,
                           const char* where) {
    const int dim = static_cast<int>(state.amplitudes.size());
    const int ext = static_cast<int>(generator.rows());
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(ext);
    for (int n = 0; n < dim; ++n) psi(n) = state.amplitudes[n];
    const Eigen::VectorXcd out = generator.exp() * psi;

    FockVector result;
    result.amplitudes.assign(out.data(), out.data() + dim);
    require_tail_health(result, where);
    return normalized(std::move(result));
}

Eigen::MatrixXcd squeeze_generator(int ext, const SqueezeParams& params) {
    // (r/2)(e^{−iθ} a² − e^{iθ} a†²), banded at offsets ±2
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(ext, ext);
    const cdouble lower = 0.5 * params.r * std::exp(cdouble(0.0, -params.theta));
    const cdouble raise = -0.5 * params.r * std::exp(cdouble(0.0, params.theta));
    for (int n = 0; n + 2 < ext; ++n) {
        const double w = std::sqrt(double(n + 1) * double(n + 2));
        g(n, n + 2) = lower * w;  // a² term
        g(n + 2, n) = raise * w;  // a†² term
    }
    return g;
}

Eigen::MatrixXcd displacement_generator(int ext, cdouble alpha) {
    // α a† − α* a, banded at offsets ±1
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(ext, ext);
    for (int n = 0; n + 1 < ext; ++n) {
        const double w = std::sqrt(double(n + 1));
        g(n + 1, n) = alpha * w;
        g(n, n + 1) = -std::conj(alpha) * w;
    }
    return g;
}

void require_normalized(const FockVector& state, const char* where) {
    const double n = state.norm();
    if (std::abs(n - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << where << ": input state is not normalized (norm " << n << ")";
        throw domain_error(msg.str());
    }
}

} // namespace

double db_to_r(double r_db) {
    if (!std::isfinite(r_db)) throw domain_error("db_to_r: non-finite input");
    return std::numbers::ln10 / 20.0 * r_db;
}

double r_to_db(double r) {
    if (!std::isfinite(r)) throw domain_error("r_to_db: non-finite input");
    return 20.0 / std::numbers::ln10 * r;
}

double squeeze_cap_r() { return db_to_r(kSqueezeCapDb); }

SqueezeParams::SqueezeParams(double r_, double theta_) : r(r_), theta(theta_) {
    if (!std::isfinite(r) || r < 0.0) throw domain_error("SqueezeParams: r must be finite and >= 0");
    if (r > squeeze_cap_r() + 1e-12) {
        std::ostringstream msg;
        msg << "SqueezeParams: r = " << r << " exceeds the " << kSqueezeCapDb << " dB cap ("
            << squeeze_cap_r() << ")";
        throw domain_error(msg.str());
    }
    if (!std::isfinite(theta)) throw domain_error("SqueezeParams: theta must be finite");
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
}

double FockVector::norm() const {
    double s = 0.0;
    for (const cdouble& c : amplitudes) s += std::norm(c);
    return std::sqrt(s);
}

double FockVector::tail_mass() const {
    const std::size_t n = amplitudes.size();
    if (n < 2) return 1.0;
    return std::norm(amplitudes[n - 1]) + std::norm(amplitudes[n - 2]);
}

void require_tail_health(const FockVector& state, const char* where) {
    const double tail = state.tail_mass();
    if (!(tail < kTailGuard)) {
        std::ostringstream msg;
        msg << where << ": truncation-health guard failed, tail mass " << tail
            << " at cutoff " << state.cutoff();
        throw truncation_error(msg.str());
    }
}

FockVector normalized(FockVector state) {
    const double n = state.norm();
    if (n < 1e-12) throw domain_error("normalized: zero vector");
    const double inv = 1.0 / n;
    for (cdouble& c : state.amplitudes) c *= inv;
    return state;
}

FockVector phase_fixed(FockVector state) {
    for (const cdouble& c : state.amplitudes) {
        const double mag = std::abs(c);
        if (mag > 1e-12) {
            const cdouble rot = std::conj(c) / mag;
            for (cdouble& a : state.amplitudes) a *= rot;
            return state;
        }
    }
    throw domain_error("phase_fixed: zero vector");
}

FockVector make_fock(int n, int cutoff) {
    if (cutoff < 2) throw domain_error("make_fock: cutoff must be >= 2");
    if (n < 0) throw domain_error("make_fock: n must be >= 0");
    if (n > cutoff - 2) {
        std::ostringstream msg;
        msg << "make_fock: n = " << n << " too close to cutoff " << cutoff;
        throw truncation_error(msg.str());
    }
    FockVector state;
    state.amplitudes.assign(cutoff + 1, cdouble(0.0, 0.0));
    state.amplitudes[n] = 1.0;
    return state;
}

FockVector make_coherent(cdouble alpha, int cutoff) {
    if (cutoff < 2) throw domain_error("make_coherent: cutoff must be >= 2");
    if (!is_finite(alpha)) throw domain_error("make_coherent: non-finite alpha");
    FockVector state;
    state.amplitudes.resize(cutoff + 1);
    cdouble c = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n <= cutoff; ++n) {
        state.amplitudes[n] = c;
        c *= alpha / std::sqrt(double(n + 1));
    }
    require_tail_health(state, "make_coherent");
    return phase_fixed(normalized(std::move(state)));
}

FockVector make_cat(cdouble alpha, CatParity parity, int cutoff) {
    if (cutoff < 2) throw domain_error("make_cat: cutoff must be >= 2");
    if (!is_finite(alpha)) throw domain_error("make_cat: non-finite alpha");
    if (parity == CatParity::Odd && std::abs(alpha) <= 1e-6)
        throw domain_error("make_cat: odd cat is the zero vector at alpha = 0");

    // N±(|α⟩ ± |−α⟩) keeps only amplitudes of the matching number parity.
    FockVector state;
    state.amplitudes.assign(cutoff + 1, cdouble(0.0, 0.0));
    cdouble c = 1.0;  // unnormalized α^n/√(n!)
    const int keep = parity == CatParity::Even ? 0 : 1;
    for (int n = 0; n <= cutoff; ++n) {
        if (n % 2 == keep) state.amplitudes[n] = c;
        c *= alpha / std::sqrt(double(n + 1));
    }
    FockVector result = phase_fixed(normalized(std::move(state)));
    require_tail_health(result, "make_cat");
    return result;
}

FockVector apply_squeeze(const FockVector& state, const SqueezeParams& params) {
    require_normalized(state, "apply_squeeze");
    if (params.r == 0.0) return state;
    const int ext = static_cast<int>(state.amplitudes.size()) + kWorkingMargin;
    return apply_generator(state, squeeze_generator(ext, params), "apply_squeeze");
}

FockVector apply_displacement(const FockVector& state, cdouble alpha) {
    require_normalized(state, "apply_displacement");
    if (!is_finite(alpha)) throw domain_error("apply_displacement: non-finite alpha");
    if (alpha == cdouble(0.0, 0.0)) return state;
    const int ext = static_cast<int>(state.amplitudes.size()) + kWorkingMargin;
    return apply_generator(state, displacement_generator(ext, alpha), "apply_displacement");
}

FockVector make_squeezed_fock(double r, double theta, int n, int cutoff) {
    const SqueezeParams params(r, theta);
    return phase_fixed(apply_squeeze(make_fock(n, cutoff), params));
}

std::pair<FockVector, double> annihilate(const FockVector& state) {
    require_normalized(state, "annihilate");
    const int dim = static_cast<int>(state.amplitudes.size());
    FockVector lowered;
    lowered.amplitudes.assign(dim, cdouble(0.0, 0.0));
    for (int n = 0; n + 1 < dim; ++n)
        lowered.amplitudes[n] = std::sqrt(double(n + 1)) * state.amplitudes[n + 1];
    const double residual = lowered.norm();
    if (residual < 1e-12)
        throw domain_error("annihilate: photon subtraction annihilates the state");
    const double inv = 1.0 / residual;
    for (cdouble& c : lowered.amplitudes) c *= inv;
    return {std::move(lowered), residual};
}

FockVector subtract_photons(const FockVector& state, int k) {
    if (k != 1 && k != 2) throw domain_error("subtract_photons: k must be 1 or 2");
    FockVector out = state;
    for (int i = 0; i < k; ++i) out = annihilate(out).first;
    return out;
}

double mean_photon(const FockVector& state) {
    double s = 0.0;
    for (std::size_t n = 0; n < state.amplitudes.size(); ++n)
        s += double(n) * std::norm(state.amplitudes[n]);
    return s;
}

double parity_expectation(const FockVector& state) {
    double s = 0.0;
    for (std::size_t n = 0; n < state.amplitudes.size(); ++n) {
        const double w = std::norm(state.amplitudes[n]);
        s += (n % 2 == 0) ? w : -w;
    }
    return s;
}

double quadrature_variance(const FockVector& state, double phi) {
    const auto& c = state.amplitudes;
    const int dim = static_cast<int>(c.size());
    cdouble a_mean(0.0, 0.0), a2_mean(0.0, 0.0);
    double n_mean = 0.0;
    for (int n = 0; n < dim; ++n) {
        n_mean += double(n) * std::norm(c[n]);
        if (n + 1 < dim) a_mean += std::conj(c[n]) * std::sqrt(double(n + 1)) * c[n + 1];
        if (n + 2 < dim)
            a2_mean += std::conj(c[n]) * std::sqrt(double(n + 1) * double(n + 2)) * c[n + 2];
    }
    const cdouble rot = std::exp(cdouble(0.0, -phi));
    const double x_mean = std::numbers::sqrt2 * std::real(rot * a_mean);
    const double x2_mean = std::real(rot * rot * a2_mean) + n_mean + 0.5;
    return x2_mean - x_mean * x_mean;
}

cdouble overlap(const FockVector& a, const FockVector& b) {
    if (a.amplitudes.size() != b.amplitudes.size())
        throw domain_error("overlap: cutoff mismatch");
    cdouble s(0.0, 0.0);
    for (std::size_t n = 0; n < a.amplitudes.size(); ++n)
        s += std::conj(a.amplitudes[n]) * b.amplitudes[n];
    return s;
}

double state_fidelity(const FockVector& a, const FockVector& b) {
    return std::norm(overlap(a, b));
}

cdouble displacement_overlap(const FockVector& state, cdouble alpha) {
    if (!is_finite(alpha)) throw domain_error("displacement_overlap: non-finite alpha");
    const auto& psi = state.amplitudes;
    const int dim = static_cast<int>(psi.size());

    // Stream rows of D_{mn} = ⟨m|D(α)|n⟩ with the two-term recurrence
    //   √(m+1) D_{m+1,n} = α D_{m,n} + √n D_{m,n−1},
    // starting from D_{0,n} = e^{−|α|²/2} (−α*)ⁿ/√(n!). All entries are
    // bounded by 1, so the recurrence is numerically tame for any α.
    std::vector<cdouble> row(dim), next(dim);
    cdouble t = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n < dim; ++n) {
        row[n] = t;
        t *= -std::conj(alpha) / std::sqrt(double(n + 1));
    }
    std::vector<double> root(dim + 1);
    for (int n = 0; n <= dim; ++n) root[n] = std::sqrt(double(n));

    cdouble acc(0.0, 0.0);
    for (int m = 0;; ++m) {
        cdouble dot(0.0, 0.0);
        for (int n = 0; n < dim; ++n) dot += row[n] * psi[n];
        acc += std::conj(psi[m]) * dot;
        if (m + 1 >= dim) break;
        const double inv = 1.0 / root[m + 1];
        next[0] = alpha * row[0] * inv;
        for (int n = 1; n < dim; ++n)
            next[n] = (alpha * row[n] + root[n] * row[n - 1]) * inv;
        row.swap(next);
    }
    return acc;
}

} // namespace cvbench
