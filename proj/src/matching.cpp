#include "cvbench/matching.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace cvbench {

namespace {

constexpr int kMaxBisection = 200;
constexpr double kParameterTol = 1e-12;
constexpr double kAchievedTol = 1e-8;

MatchSolution infeasible(MatchFamily family, double target, const std::string& reason) {
    MatchSolution s;
    s.family = family;
    s.target_n = target;
    s.feasible = false;
    s.reason = reason;
    return s;
}

// ⟨n⟩ of the two-photon-subtracted squeezed vacuum evaluated through the
// actual construction pipeline (squeeze, subtract twice, normalize).
double subtracted2_mean_photon(double r, int cutoff) {
    StateSpec spec;
    spec.family = Family::SubtractedSqueezed;
    spec.r_db = r_to_db(r);
    spec.theta = 0.0;
    spec.k = 2;
    spec.cutoff = cutoff;
    return mean_photon(build_state_auto(spec));
}

// Bisection on a strictly increasing f over [lo, hi] assuming f(lo) < target;
// the upper end is never evaluated, so an unreachable target converges to hi
// and is reported infeasible by the achieved-value check.
double bisect_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double target) {
    for (int i = 0; i < kMaxBisection && hi - lo > kParameterTol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double odd_cat_mean(double alpha) {
    const double u = alpha * alpha;
    return u / std::tanh(u);
}

double even_cat_mean(double alpha) {
    const double u = alpha * alpha;
    return u * std::tanh(u);
}

} // namespace

const char* family_name(MatchFamily family) {
    switch (family) {
        case MatchFamily::SqueezedVacuum: return "squeezed_vacuum";
        case MatchFamily::Subtracted1: return "subtracted_1";
        case MatchFamily::Subtracted2: return "subtracted_2";
        case MatchFamily::EvenCat: return "even_cat";
        case MatchFamily::OddCat: return "odd_cat";
        case MatchFamily::Fock: return "fock";
    }
    return "?";
}

MatchFamily family_from_name(const std::string& name) {
    for (MatchFamily f : all_families())
        if (name == family_name(f)) return f;
    throw parse_error("unknown family '" + name + "'");
}

std::vector<MatchFamily> all_families() {
    return {MatchFamily::SqueezedVacuum, MatchFamily::Subtracted1, MatchFamily::Subtracted2,
            MatchFamily::EvenCat, MatchFamily::OddCat, MatchFamily::Fock};
}

MatchSolution solve_squeezed_family(MatchFamily family, double target_n, int cutoff) {
    if (!std::isfinite(target_n))
        return infeasible(family, target_n, "non-finite target");
    const double cap = squeeze_cap_r();

    MatchSolution s;
    s.family = family;
    s.target_n = target_n;

    switch (family) {
        case MatchFamily::SqueezedVacuum: {
            // ⟨n⟩ = sinh² r
            if (target_n < 0.0) return infeasible(family, target_n, "target below minimum 0");
            const double r = std::asinh(std::sqrt(target_n));
            if (r > cap + 1e-12)
                return infeasible(family, target_n, "required squeezing exceeds 12.5 dB cap");
            s.parameter = r;
            s.r_db = r_to_db(r);
            s.achieved_n = std::pow(std::sinh(r), 2);
            s.feasible = true;
            return s;
        }
        case MatchFamily::Subtracted1: {
            // ⟨n⟩ = 1 + 3 sinh² r
            if (target_n < 1.0 - 1e-12)
                return infeasible(family, target_n, "target below minimum 1");
            const double r = std::asinh(std::sqrt(std::max(0.0, (target_n - 1.0) / 3.0)));
            if (r > cap + 1e-12)
                return infeasible(family, target_n, "required squeezing exceeds 12.5 dB cap");
            s.parameter = r;
            s.r_db = r_to_db(r);
            s.achieved_n = 1.0 + 3.0 * std::pow(std::sinh(r), 2);
            s.feasible = true;
            return s;
        }
        case MatchFamily::Subtracted2: {
            const double r_lo = 1e-6;
            const double n_lo = subtracted2_mean_photon(r_lo, cutoff);
            if (target_n < n_lo)
                return infeasible(family, target_n, "target below the family's numeric minimum");
            auto f = [cutoff](double r) { return subtracted2_mean_photon(r, cutoff); };
            const double r = bisect_increasing(f, r_lo, cap, target_n);
            const double achieved = f(r);
            if (std::abs(achieved - target_n) > kAchievedTol)
                return infeasible(family, target_n, "required squeezing exceeds 12.5 dB cap");
            s.parameter = r;
            s.r_db = r_to_db(r);
            s.achieved_n = achieved;
            s.feasible = true;
            return s;
        }
        default:
            throw domain_error("solve_squeezed_family: not a squeezed family");
    }
}

MatchSolution solve_cat_alpha(CatParity parity, double target_n) {
    const MatchFamily family =
        parity == CatParity::Even ? MatchFamily::EvenCat : MatchFamily::OddCat;
    if (!std::isfinite(target_n))
        return infeasible(family, target_n, "non-finite target");

    const double lo = 1e-6, hi = 6.0;
    const auto mean = parity == CatParity::Even ? even_cat_mean : odd_cat_mean;
    if (parity == CatParity::Odd && target_n <= 1.0)
        return infeasible(family, target_n, "odd cat requires target > 1 (limit as alpha -> 0)");
    if (parity == CatParity::Even && target_n <= mean(lo))
        return infeasible(family, target_n, "even cat requires target > 0");
    const double alpha = bisect_increasing(mean, lo, hi, target_n);
    const double achieved = mean(alpha);
    if (std::abs(achieved - target_n) > kAchievedTol)
        return infeasible(family, target_n, "target outside the bisection bracket alpha <= 6");

    MatchSolution s;
    s.family = family;
    s.target_n = target_n;
    s.parameter = alpha;
    s.achieved_n = achieved;
    s.feasible = true;
    return s;
}

MatchSolution solve_family(MatchFamily family, double target_n, int cutoff) {
    switch (family) {
        case MatchFamily::SqueezedVacuum:
        case MatchFamily::Subtracted1:
        case MatchFamily::Subtracted2:
            return solve_squeezed_family(family, target_n, cutoff);
        case MatchFamily::EvenCat:
            return solve_cat_alpha(CatParity::Even, target_n);
        case MatchFamily::OddCat:
            return solve_cat_alpha(CatParity::Odd, target_n);
        case MatchFamily::Fock: {
            const double rounded = std::round(target_n);
            if (std::abs(target_n - rounded) > 1e-9 || rounded < 0.0)
                return infeasible(family, target_n, "fock reference requires an integer target");
            MatchSolution s;
            s.family = family;
            s.target_n = target_n;
            s.parameter = rounded;
            s.achieved_n = rounded;
            s.feasible = true;
            return s;
        }
    }
    throw domain_error("solve_family: unreachable");
}

std::vector<MatchSolution> matched_set(double target_n, const std::vector<MatchFamily>& families,
                                       int cutoff) {
    if (families.empty()) throw domain_error("matched_set: empty family list");
    std::vector<MatchSolution> out;
    out.reserve(families.size());
    for (MatchFamily f : families) out.push_back(solve_family(f, target_n, cutoff));
    return out;
}

StateSpec matched_spec(const MatchSolution& solution, double theta, int cutoff) {
    if (!solution.feasible)
        throw domain_error(std::string("matched_spec: infeasible solution for ") +
                           family_name(solution.family) + ": " + solution.reason);
    StateSpec spec;
    spec.cutoff = cutoff;
    spec.theta = theta;
    switch (solution.family) {
        case MatchFamily::SqueezedVacuum:
            spec.family = Family::SqueezedFock;
            spec.r_db = solution.r_db;
            spec.n = 0;
            break;
        case MatchFamily::Subtracted1:
            spec.family = Family::SubtractedSqueezed;
            spec.r_db = solution.r_db;
            spec.k = 1;
            break;
        case MatchFamily::Subtracted2:
            spec.family = Family::SubtractedSqueezed;
            spec.r_db = solution.r_db;
            spec.k = 2;
            break;
        case MatchFamily::EvenCat:
            spec.family = Family::EvenCat;
            spec.alpha = solution.parameter;
            break;
        case MatchFamily::OddCat:
            spec.family = Family::OddCat;
            spec.alpha = solution.parameter;
            break;
        case MatchFamily::Fock:
            spec.family = Family::Fock;
            spec.n = static_cast<int>(solution.parameter);
            break;
    }
    return spec;
}

std::string match_csv_header() {
    return "family,target_n,parameter,r_db_or_alpha,achieved_n,feasible,reason";
}

std::string match_csv_row(const MatchSolution& s) {
    const bool squeezed = s.family == MatchFamily::SqueezedVacuum ||
                          s.family == MatchFamily::Subtracted1 ||
                          s.family == MatchFamily::Subtracted2;
    std::ostringstream out;
    out << family_name(s.family) << ',' << format_double(s.target_n) << ','
        << format_double(s.parameter) << ','
        << format_double(squeezed ? s.r_db : s.parameter) << ','
        << format_double(s.achieved_n) << ',' << (s.feasible ? "true" : "false") << ','
        << s.reason;
    return out.str();
}

} // namespace cvbench
