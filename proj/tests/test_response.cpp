#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "cvbench/fock.hpp"
#include "cvbench/response.hpp"

using namespace cvbench;

namespace {

constexpr double kPi = std::numbers::pi;

double laguerre(int n, double s) {
    double lm1 = 1.0, l = 1.0 - s;
    if (n == 0) return 1.0;
    for (int m = 1; m < n; ++m) {
        const double lp1 = ((2.0 * m + 1.0 - s) * l - m * lm1) / (m + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

} // namespace

TEST_CASE("displacement fidelity closed forms") {
    const FockVector vac = make_fock(0, 80);
    CHECK(displacement_fidelity(vac, 0.0) == doctest::Approx(1.0));
    for (double eps : {0.1, 0.5, 1.3}) {
        CHECK(displacement_fidelity(vac, eps) ==
              doctest::Approx(std::exp(-eps * eps)).epsilon(1e-12));
        CHECK(displacement_fidelity(vac, cdouble(0.0, eps)) ==
              doctest::Approx(std::exp(-eps * eps)).epsilon(1e-12));
    }
    for (int n : {1, 2, 5}) {
        const FockVector state = make_fock(n, 80);
        for (double eps : {0.15, 0.4}) {
            const double s = eps * eps;
            CHECK(displacement_fidelity(state, eps) ==
                  doctest::Approx(std::exp(-s) * std::pow(laguerre(n, s), 2)).epsilon(1e-11));
        }
    }
}

TEST_CASE("fidelity symmetry under alpha -> -alpha for parity eigenstates") {
    const FockVector states[] = {make_fock(2, 80), make_cat(1.6, CatParity::Odd, 80),
                                 make_squeezed_fock(0.69078, 0.7, 1, 80)};
    for (const FockVector& s : states)
        for (cdouble a : {cdouble(0.3, 0.1), cdouble(0.0, 0.7), cdouble(-0.5, 0.4)})
            CHECK(std::abs(displacement_fidelity(s, a) - displacement_fidelity(s, -a)) < 1e-10);
}

TEST_CASE("fidelity scans") {
    const FockVector vac = make_fock(0, 80);
    const FidelityScan scan = fidelity_scan(vac, 0.0, 1.0, 101);
    CHECK(scan.epsilons.front() == 0.0);
    CHECK(scan.fidelities.front() == 1.0);
    for (std::size_t i = 1; i < scan.fidelities.size(); ++i) {
        CHECK(scan.fidelities[i] < scan.fidelities[i - 1]);
        CHECK(scan.fidelities[i] ==
              doctest::Approx(std::exp(-scan.epsilons[i] * scan.epsilons[i])).epsilon(1e-11));
    }

    // Fock scans are direction-independent
    const FockVector one = make_fock(1, 80);
    const FidelityScan s0 = fidelity_scan(one, 0.0, 1.5, 64);
    for (double phi : {0.7, 2.0, 4.4}) {
        const FidelityScan sp = fidelity_scan(one, phi, 1.5, 64);
        for (std::size_t i = 0; i < s0.fidelities.size(); ++i)
            CHECK(std::abs(sp.fidelities[i] - s0.fidelities[i]) < 1e-10);
    }

    // squeezed vacuum: along the squeezed axis the fidelity decays faster
    const FockVector sq = make_squeezed_fock(0.69078, 0.0, 0, 80);
    const FidelityScan fx = fidelity_scan(sq, 0.0, 1.0, 64);
    const FidelityScan fp = fidelity_scan(sq, 0.5 * kPi, 1.0, 64);
    for (std::size_t i = 1; i < fx.fidelities.size(); ++i)
        CHECK(fx.fidelities[i] < fp.fidelities[i]);

    CHECK_THROWS_AS(fidelity_scan(vac, 0.0, 1.0, 8), domain_error);
}

TEST_CASE("threshold radius") {
    const FockVector vac = make_fock(0, 80);
    const RadiusResult rv = threshold_radius(fidelity_scan(vac, 0.0, 2.0, 201), 0.9);
    CHECK_FALSE(rv.is_lower_bound);
    CHECK(rv.radius == doctest::Approx(std::sqrt(-std::log(0.9))).epsilon(2e-4));
    CHECK(rv.radius == doctest::Approx(0.32459).epsilon(1e-3));

    const RadiusResult r1 = threshold_radius(fidelity_scan(make_fock(1, 80), 0.0, 2.0, 201), 0.9);
    CHECK(r1.radius == doctest::Approx(0.18630).epsilon(1e-3));

    // no crossing inside the scan window -> lower bound
    const RadiusResult rb = threshold_radius(fidelity_scan(vac, 0.0, 0.2, 64), 0.9);
    CHECK(rb.is_lower_bound);
    CHECK(rb.radius == 0.2);

    CHECK_THROWS_AS(threshold_radius(fidelity_scan(vac, 0.0, 1.0, 64), 1.0), domain_error);
    CHECK_THROWS_AS(threshold_radius(fidelity_scan(vac, 0.0, 1.0, 64), 0.0), domain_error);
}

TEST_CASE("only the first crossing counts when revivals exist") {
    FidelityScan scan;
    scan.phi = 0.0;
    scan.epsilons = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    scan.fidelities = {1.0, 0.95, 0.85, 0.95, 0.97, 0.2};
    const RadiusResult r = threshold_radius(scan, 0.9);
    CHECK_FALSE(r.is_lower_bound);
    CHECK(r.radius == doctest::Approx(0.1 + 0.1 * (0.95 - 0.9) / (0.95 - 0.85)).epsilon(1e-12));
}

TEST_CASE("lowering the threshold never shrinks the radius") {
    const FockVector cat = make_cat(1.6, CatParity::Odd, 80);
    const FidelityScan scan = fidelity_scan(cat, 0.35, 2.0, 201);
    double prev = 0.0;
    for (double th : {0.95, 0.9, 0.8, 0.6, 0.4}) {
        const double r = threshold_radius(scan, th).radius;
        CHECK(r >= prev - 1e-12);
        prev = r;
    }
}

TEST_CASE("axis radii") {
    const auto [vx, vp] = axis_radii(make_fock(0, 80));
    CHECK(vx.radius == doctest::Approx(0.32459).epsilon(1e-3));
    CHECK(vp.radius == doctest::Approx(0.32459).epsilon(1e-3));

    const auto [fx, fp] = axis_radii(make_fock(2, 80));
    CHECK(std::abs(fx.radius - fp.radius) < 1e-6);

    const auto [sx, sp] = axis_radii(make_squeezed_fock(0.69078, 0.0, 1, 80));
    CHECK(sp.radius > sx.radius);
}

TEST_CASE("polar contours") {
    const PolarContour iso = polar_contour(make_fock(1, 80), 72);
    const ContourShape iso_shape = contour_shape(iso);
    CHECK(iso_shape.defined);
    CHECK(iso_shape.ratio == doctest::Approx(1.0).epsilon(1e-3));

    // squeezed Fock radii scale as e^{∓r}; the ratio is e^{2r}
    const double r = 0.3;
    const PolarContour aniso = polar_contour(make_squeezed_fock(r, 0.0, 1, 80), 36);
    const ContourShape shape = contour_shape(aniso);
    CHECK(shape.defined);
    CHECK(shape.ratio == doctest::Approx(std::exp(2.0 * r)).epsilon(0.1));

    CHECK_THROWS_AS(polar_contour(make_fock(1, 80), 4), domain_error);
}

TEST_CASE("squeeze phase rotates the contour by theta/2") {
    const int n_angles = 72;
    const double bin = 2.0 * kPi / n_angles;
    const int shift_bins = 4;
    const double theta = 2.0 * shift_bins * bin;  // contour rotates by theta/2 = 4 bins
    const FockVector base = make_squeezed_fock(0.5, 0.0, 1, 80);
    const FockVector rotated = make_squeezed_fock(0.5, theta, 1, 80);
    const PolarContour cb = polar_contour(base, n_angles, 0.9, 2.0, 201);
    const PolarContour cr = polar_contour(rotated, n_angles, 0.9, 2.0, 201);
    for (int i = 0; i < n_angles; ++i) {
        const int j = (i + n_angles - shift_bins) % n_angles;
        CHECK(cr.radii[i].radius == doctest::Approx(cb.radii[j].radius).epsilon(1e-6));
    }
}

TEST_CASE("contours of parity eigenstates obey R(phi) = R(phi + pi)") {
    const PolarContour c = polar_contour(make_squeezed_fock(0.6, 0.0, 1, 80), 36);
    for (int i = 0; i < 18; ++i)
        CHECK(c.radii[i].radius == doctest::Approx(c.radii[i + 18].radius).epsilon(1e-8));
}

TEST_CASE("small-displacement slope equals twice the conjugate quadrature variance") {
    const FockVector vac = make_fock(0, 80);
    CHECK(small_displacement_slope(vac, 0.0) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(small_displacement_slope(make_fock(1, 80), 1.2) == doctest::Approx(3.0).epsilon(0.01));

    const double r = 0.69078;
    CHECK(small_displacement_slope(make_squeezed_fock(r, 0.0, 0, 80), 0.0) ==
          doctest::Approx(std::exp(2.0 * r)).epsilon(0.01));
    CHECK(small_displacement_slope(make_squeezed_fock(r, 0.0, 0, 80), 0.0) ==
          doctest::Approx(3.9811).epsilon(0.01));

    // property over states and directions
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const FockVector states[] = {make_squeezed_fock(r, 0.0, 1, 80),
                                 make_cat(1.6, CatParity::Even, 80),
                                 make_coherent(cdouble(0.9, -0.4), 80),
                                 subtract_photons(make_squeezed_fock(r, 0.3, 0, 80), 2)};
    for (const FockVector& s : states)
        for (int trial = 0; trial < 3; ++trial) {
            const double phi = angle(rng);
            const double expected = 2.0 * quadrature_variance(s, phi + 0.5 * kPi);
            CHECK(small_displacement_slope(s, phi) ==
                  doctest::Approx(expected).epsilon(0.01));
        }
}

TEST_CASE("sectors") {
    const PolarContour c = polar_contour(make_squeezed_fock(0.4, 0.0, 1, 80), 24);

    const SectorResult self_adv = advantage_sector(c, c);
    CHECK(self_adv.measure == 0.0);
    const SectorResult self_tol = tolerance_sector(c, c, 0.9);
    CHECK(self_tol.measure == doctest::Approx(2.0 * kPi));

    PolarContour scaled = c;
    for (RadiusResult& r : scaled.radii) r.radius *= 1.1;
    CHECK(advantage_sector(scaled, c).measure == doctest::Approx(2.0 * kPi));
    CHECK(advantage_sector(c, scaled).measure == 0.0);

    PolarContour half = c;
    for (RadiusResult& r : half.radii) r.radius *= 0.5;
    CHECK(tolerance_sector(half, c, 0.4).measure == doctest::Approx(2.0 * kPi));
    CHECK(tolerance_sector(half, c, 0.6).measure == 0.0);

    PolarContour different = polar_contour(make_fock(1, 80), 36);
    CHECK_THROWS_AS(advantage_sector(c, different), domain_error);
    CHECK_THROWS_AS(tolerance_sector(c, c, 1.2), domain_error);
}

TEST_CASE("scan and contour exports") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cvbench_response_io";
    fs::create_directories(dir);

    const FidelityScan scan = fidelity_scan(make_fock(0, 40), 0.0, 1.0, 32);
    write_scan_csv(scan, (dir / "scan.csv").string());
    std::ifstream sin(dir / "scan.csv");
    std::string header;
    std::getline(sin, header);
    CHECK(header == "phi,epsilon,fidelity");
    int rows = 0;
    for (std::string line; std::getline(sin, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 32);

    const PolarContour contour = polar_contour(make_fock(1, 40), 12);
    write_contour_csv(contour, (dir / "contour.csv").string());
    write_contour_envelope(contour, 0.9, "contour.csv", "fock{n=1,cutoff=40}",
                           (dir / "contour.json").string());
    std::ifstream cin_(dir / "contour.csv");
    std::getline(cin_, header);
    CHECK(header == "phi,radius,is_lower_bound");
    std::ifstream env(dir / "contour.json");
    std::string body((std::istreambuf_iterator<char>(env)), std::istreambuf_iterator<char>());
    CHECK(body.find("\"threshold\": 0.9") != std::string::npos);
    CHECK(body.find("polar_contour") != std::string::npos);
    fs::remove_all(dir);
}
