#include "cvbench/wigner.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cvbench/parallel.hpp"

namespace cvbench {

namespace {

constexpr double kPi = std::numbers::pi;

// Trapezoidal weight along one axis.
double edge_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << body;
}

} // namespace

PhaseGrid PhaseGrid::symmetric(double half_x, double half_p, int n_x_, int n_p_) {
    PhaseGrid g;
    g.x_min = -half_x;
    g.x_max = half_x;
    g.p_min = -half_p;
    g.p_max = half_p;
    g.n_x = n_x_;
    g.n_p = n_p_;
    g.validate();
    return g;
}

PhaseGrid PhaseGrid::square(double half_width, int points) {
    return symmetric(half_width, half_width, points, points);
}

void PhaseGrid::validate() const {
    if (n_x < 3 || n_p < 3 || n_x % 2 == 0 || n_p % 2 == 0)
        throw domain_error("PhaseGrid: sample counts must be odd and >= 3");
    if (!(x_max > 0.0) || !(p_max > 0.0) || x_min != -x_max || p_min != -p_max)
        throw domain_error("PhaseGrid: window must be symmetric about the origin");
}

// --- primary method ----------------------------------------------------------
//
// Expanding the displaced-parity form in the number basis gives
//   W(x,p) = (1/π) Σ_{n,k} [k=0: (−1)^n|c_n|² ; k>0: 2 Re(c*_{n+k} c_n (−1)^n φ^k)]
//            · V_n^{(k)}(s),   α = (x+ip)/√2,  s = |2α|²,  φ = 2α/|2α|,
// where V_n^{(k)}(s) = e^{−s/2}|2α|^k √(n!/(n+k)!) L_n^{(k)}(s) is, up to the
// Laguerre sign, the matrix element |⟨n+k|D(2α)|n⟩|. Running the three-term
// recurrence directly on V keeps every intermediate bounded by 1, for any
// window and cutoff; the bare (2α)^k and L_n^{(k)} factors would overflow at
// high cutoffs on wide windows.

namespace {

struct WignerKernel {
    int dim = 0;  // cutoff + 1
    std::vector<std::vector<cdouble>> cross;  // per k: c*_{n+k} c_n (−1)^n; k=0 diagonal
    std::vector<char> active;                 // per k: any amplitude product above 1e−18
    std::vector<double> inv_np1;              // 1/(n+1)
    std::vector<double> sqrt_int;             // √i
    std::vector<double> inv_sqrt_int;         // 1/√i
    std::vector<double> half_log_fact;        // ln(k!)/2

    explicit WignerKernel(const FockVector& state) {
        const auto& c = state.amplitudes;
        dim = static_cast<int>(c.size());
        cross.resize(dim);
        active.assign(dim, 0);
        for (int k = 0; k < dim; ++k) {
            auto& g = cross[k];
            g.resize(dim - k);
            double peak = 0.0;
            for (int n = 0; n + k < dim; ++n) {
                const cdouble prod = std::conj(c[n + k]) * c[n];
                peak = std::max(peak, std::abs(prod));
                g[n] = (n % 2) ? -prod : prod;
            }
            active[k] = peak > 1e-18;
        }
        inv_np1.resize(dim + 1);
        sqrt_int.resize(2 * dim + 2);
        inv_sqrt_int.resize(2 * dim + 2);
        half_log_fact.resize(dim + 1);
        for (int n = 0; n <= dim; ++n) inv_np1[n] = 1.0 / double(n + 1);
        sqrt_int[0] = 0.0;
        inv_sqrt_int[0] = 0.0;
        for (int i = 1; i <= 2 * dim + 1; ++i) {
            sqrt_int[i] = std::sqrt(double(i));
            inv_sqrt_int[i] = 1.0 / sqrt_int[i];
        }
        half_log_fact[0] = 0.0;
        for (int k = 1; k <= dim; ++k)
            half_log_fact[k] = half_log_fact[k - 1] + 0.5 * std::log(double(k));
    }

    double evaluate(double x, double p) const {
        const double s = 2.0 * (x * x + p * p);
        const double mod = std::sqrt(s);  // |2α|
        const double log_mod = mod > 0.0 ? std::log(mod) : 0.0;
        const cdouble phase_step =
            mod > 0.0 ? cdouble(std::numbers::sqrt2 * x / mod, std::numbers::sqrt2 * p / mod)
                      : cdouble(1.0, 0.0);

        double acc = 0.0;
        cdouble phase(1.0, 0.0);
        for (int k = 0; k < dim; ++k) {
            if (k > 0) {
                phase *= phase_step;
                if (mod == 0.0) break;  // D(0) is diagonal
            }
            if (!active[k]) continue;
            const auto& g = cross[k];
            const int count = dim - k;
            const double weight = k == 0 ? 1.0 : 2.0;
            // V_0 = e^{−s/2} |2α|^k / √(k!) = |⟨k|D(2α)|0⟩|
            double v0 = std::exp(-0.5 * s + k * log_mod - half_log_fact[k]);
            double sum = (g[0].real() * phase.real() - g[0].imag() * phase.imag()) * v0;
            if (count > 1) {
                double rho_prev = inv_sqrt_int[k + 1];  // ρ_0 = √(1/(k+1))
                double v1 = rho_prev * (1.0 + k - s) * v0;
                sum += (g[1].real() * phase.real() - g[1].imag() * phase.imag()) * v1;
                for (int n = 1; n + 1 < count; ++n) {
                    const double rho = sqrt_int[n + 1] * inv_sqrt_int[n + k + 1];
                    const double v2 = ((2.0 * n + k + 1.0 - s) * rho * v1 -
                                       (n + k) * rho * rho_prev * v0) *
                                      inv_np1[n];
                    v0 = v1;
                    v1 = v2;
                    rho_prev = rho;
                    sum += (g[n + 1].real() * phase.real() - g[n + 1].imag() * phase.imag()) * v1;
                }
            }
            acc += weight * sum;
        }
        return acc / kPi;
    }
};

} // namespace

WignerField wigner_field(const FockVector& state, const PhaseGrid& grid) {
    grid.validate();
    require_tail_health(state, "wigner_field");
    const WignerKernel kernel(state);

    WignerField field;
    field.grid = grid;
    field.values.resize(std::size_t(grid.n_x) * grid.n_p);
    parallel_for(static_cast<std::size_t>(grid.n_x), [&](std::size_t ix) {
        const double x = grid.x(static_cast<int>(ix));
        double* row = field.values.data() + ix * grid.n_p;
        for (int jp = 0; jp < grid.n_p; ++jp) row[jp] = kernel.evaluate(x, grid.p(jp));
    });
    return field;
}

// --- oracle method -----------------------------------------------------------

namespace {

// Normalized harmonic-oscillator eigenfunctions φ_0..φ_{nmax} at x, by the
// stable upward recurrence φ_{n+1} = x√(2/(n+1)) φ_n − √(n/(n+1)) φ_{n−1}.
void hermite_functions(double x, int nmax, std::vector<double>& phi) {
    phi.resize(nmax + 1);
    phi[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    if (nmax == 0) return;
    phi[1] = std::numbers::sqrt2 * x * phi[0];
    for (int n = 1; n < nmax; ++n)
        phi[n + 1] = x * std::sqrt(2.0 / (n + 1)) * phi[n] -
                     std::sqrt(double(n) / (n + 1)) * phi[n - 1];
}

cdouble position_wavefunction(const FockVector& state, double x, std::vector<double>& scratch) {
    const int nmax = state.cutoff();
    hermite_functions(x, nmax, scratch);
    cdouble psi(0.0, 0.0);
    for (int n = 0; n <= nmax; ++n) psi += state.amplitudes[n] * scratch[n];
    return psi;
}

} // namespace

WignerField wigner_field_wavefunction(const FockVector& state, const PhaseGrid& grid) {
    grid.validate();
    require_tail_health(state, "wigner_field_wavefunction");

    const int nmax = state.cutoff();
    // The integrand ψ*(x+y)ψ(x−y) vanishes once either argument passes the
    // classical turning point, so |y| ≤ R suffices for every x in the window.
    const double radius = std::sqrt(2.0 * (nmax + 1.0)) + 8.0;
    const double p_extent = std::max(std::abs(grid.p_min), std::abs(grid.p_max));
    const double omega_max = 2.0 * std::sqrt(2.0 * nmax + 1.0) + 2.0 * p_extent;
    const double h = kPi / (5.0 * omega_max);
    const int half = static_cast<int>(std::ceil(radius / h));
    const int n_y = 2 * half + 1;

    WignerField field;
    field.grid = grid;
    field.values.resize(std::size_t(grid.n_x) * grid.n_p);
    parallel_for(static_cast<std::size_t>(grid.n_x), [&](std::size_t ix) {
        const double x = grid.x(static_cast<int>(ix));
        std::vector<double> scratch;
        std::vector<cdouble> f(n_y);
        for (int j = 0; j < n_y; ++j) {
            const double y = (j - half) * h;
            const cdouble left = position_wavefunction(state, x + y, scratch);
            const cdouble right = position_wavefunction(state, x - y, scratch);
            f[j] = std::conj(left) * right * ((j == 0 || j == n_y - 1) ? 0.5 : 1.0);
        }
        double* row = field.values.data() + ix * grid.n_p;
        for (int jp = 0; jp < grid.n_p; ++jp) {
            const double p = grid.p(jp);
            const cdouble step = std::exp(cdouble(0.0, 2.0 * p * h));
            cdouble phase = std::exp(cdouble(0.0, 2.0 * p * (-half * h)));
            cdouble sum(0.0, 0.0);
            for (int j = 0; j < n_y; ++j) {
                sum += f[j] * phase;
                phase *= step;
            }
            row[jp] = sum.real() * h / kPi;
        }
    });
    return field;
}

double wigner_at_origin(const FockVector& state) {
    return parity_expectation(state) / kPi;
}

double normalization_integral(const WignerField& field) {
    const PhaseGrid& g = field.grid;
    double total = 0.0;
    for (int ix = 0; ix < g.n_x; ++ix) {
        const double wx = edge_weight(ix, g.n_x);
        double row = 0.0;
        for (int jp = 0; jp < g.n_p; ++jp)
            row += edge_weight(jp, g.n_p) * field.at(ix, jp);
        total += wx * row;
    }
    return total * g.dx() * g.dp();
}

NegativityResult integrated_negativity(const WignerField& field) {
    const PhaseGrid& g = field.grid;
    double total = 0.0, total_abs = 0.0;
    for (int ix = 0; ix < g.n_x; ++ix) {
        const double wx = edge_weight(ix, g.n_x);
        double row = 0.0, row_abs = 0.0;
        for (int jp = 0; jp < g.n_p; ++jp) {
            const double w = edge_weight(jp, g.n_p);
            const double v = field.at(ix, jp);
            row += w * v;
            row_abs += w * std::abs(v);
        }
        total += wx * row;
        total_abs += wx * row_abs;
    }
    NegativityResult result;
    result.norm_integral = total * g.dx() * g.dp();
    result.window_limited =
        result.norm_integral < kWindowNormLow || result.norm_integral > kWindowNormHigh;
    result.delta = std::max(0.0, 0.5 * (total_abs * g.dx() * g.dp() - 1.0));
    return result;
}

ConvergenceReport convergence_probe(const StateSpec& spec, const ProbeSettings& base,
                                    const ProbeSettings& refined) {
    base.grid.validate();
    refined.grid.validate();
    const bool finer = refined.cutoff >= base.cutoff &&
                       refined.grid.dx() <= base.grid.dx() + 1e-12 &&
                       refined.grid.dp() <= base.grid.dp() + 1e-12 &&
                       refined.grid.x_max >= base.grid.x_max - 1e-12 &&
                       refined.grid.p_max >= base.grid.p_max - 1e-12;
    const bool strict = refined.cutoff > base.cutoff || refined.grid.n_x > base.grid.n_x ||
                        refined.grid.n_p > base.grid.n_p ||
                        refined.grid.x_max > base.grid.x_max + 1e-12;
    if (!finer || !strict)
        throw domain_error("convergence_probe: refined settings must be strictly finer/larger");

    auto evaluate = [&](const ProbeSettings& s, double& delta, double& per_n, bool& limited) {
        const FockVector state = build_state(with_cutoff(spec, s.cutoff));
        const NegativityResult neg = integrated_negativity(wigner_field(state, s.grid));
        const double n_mean = mean_photon(state);
        delta = neg.delta;
        per_n = n_mean > 1e-9 ? neg.delta / n_mean : 0.0;
        limited = neg.window_limited;
    };

    ConvergenceReport report;
    bool limited_base = false, limited_refined = false;
    evaluate(base, report.delta_base, report.per_n_base, limited_base);
    evaluate(refined, report.delta_refined, report.per_n_refined, limited_refined);
    report.delta_change = std::abs(report.delta_refined - report.delta_base);
    report.per_n_change = std::abs(report.per_n_refined - report.per_n_base);
    report.window_limited = limited_base || limited_refined;
    return report;
}

void write_wigner_csv(const WignerField& field, const std::string& path) {
    std::ostringstream out;
    out << "x,p,w\n";
    for (int ix = 0; ix < field.grid.n_x; ++ix)
        for (int jp = 0; jp < field.grid.n_p; ++jp)
            out << format_double(field.grid.x(ix)) << ',' << format_double(field.grid.p(jp))
                << ',' << format_double(field.at(ix, jp)) << '\n';
    write_text_file(path, out.str());
}

void write_wigner_envelope(const WignerField& field, const std::string& csv_name,
                           const std::string& state_label, const std::string& path) {
    nlohmann::json env;
    env["kind"] = "wigner_field";
    env["csv"] = csv_name;
    env["state"] = state_label;
    env["grid"] = {{"x_min", field.grid.x_min}, {"x_max", field.grid.x_max},
                   {"p_min", field.grid.p_min}, {"p_max", field.grid.p_max},
                   {"n_x", field.grid.n_x},     {"n_p", field.grid.n_p}};
    env["convention"] = {{"commutator", "[x,p]=i"}, {"alpha", "(x+ip)/sqrt(2)"}};
    write_text_file(path, env.dump(2) + "\n");
}

} // namespace cvbench
