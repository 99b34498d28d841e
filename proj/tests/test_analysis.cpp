#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kgstep/analysis.hpp"
#include "kgstep/oracle.hpp"

using namespace kgstep;

namespace {

const StepParams kRef{1.542, 5.064e-2};

FieldScan synthetic_gaussian(double t0, double sigma) {
    FieldScan scan{ScanAxis::OverT, 0.25, {}, kRef};
    for (int i = 0; i <= 400; ++i) {
        const double t = 0.01 + 0.19 * i / 400.0;
        ComplexAmplitude a{};
        const double v = std::exp(-0.5 * (t - t0) * (t - t0) / (sigma * sigma));
        a.value = {v, 0.0};
        a.abs2 = v * v;
        scan.samples.push_back({t, a});
    }
    return scan;
}

}  // namespace

TEST_CASE("detect_peak on a synthetic gaussian") {
    const double dt = 0.19 / 400.0;
    const FieldScan scan = synthetic_gaussian(0.1234, 0.02);
    const PeakReport r = detect_peak(scan);
    CHECK(std::abs(r.t_peak - 0.1234) < dt * dt / 0.02);
    CHECK(r.peak_value == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r.x == 0.25);
}

TEST_CASE("detect_peak rejects scans without an interior maximum") {
    // A constant scan (e.g. the stationary density against itself).
    FieldScan flat{ScanAxis::OverT, 0.1, {}, kRef};
    for (int i = 0; i <= 100; ++i) {
        ComplexAmplitude a{};
        a.value = {0.5, 0.0};
        a.abs2 = 0.25;
        flat.samples.push_back({0.01 + i * 1e-3, a});
    }
    CHECK_THROWS_AS(detect_peak(flat), std::runtime_error);
    // Monotone scan.
    FieldScan mono = flat;
    for (size_t i = 0; i < mono.samples.size(); ++i)
        mono.samples[i].second.abs2 = static_cast<double>(i);
    CHECK_THROWS_AS(detect_peak(mono), std::runtime_error);
    // Wrong axis.
    FieldScan overx = flat;
    overx.axis = ScanAxis::OverX;
    CHECK_THROWS_AS(detect_peak(overx), std::invalid_argument);
}

TEST_CASE("peak ordering: deeper probes peak earlier") {
    const PeakReport p01 =
        detect_peak(make_scan_over_t(kRef, 0.1, 0.0005, 0.3, 600));
    const PeakReport p03 =
        detect_peak(make_scan_over_t(kRef, 0.3, 0.0005, 0.3, 600));
    const PeakReport p05 =
        detect_peak(make_scan_over_t(kRef, 0.5, 0.0005, 0.3, 600));
    CHECK(p05.t_peak < p03.t_peak);
    CHECK(p03.t_peak < p01.t_peak);
    // While the fronts arrive in the opposite (causal) order.
    CHECK(0.1 / kSpeedOfLight < 0.3 / kSpeedOfLight);
}

TEST_CASE("precursor zeros track the mapped J1 zeros") {
    const double t = 0.05;
    const FieldScan scan = make_scan_over_x(kRef, t, 12.0, 14.9, 364);
    const double grid_dx = scan.samples[1].first - scan.samples[0].first;
    const OscillationReport rep = precursor_zeros(scan);
    REQUIRE(rep.zeros.size() >= 3);
    const std::vector<double> mapped = j1_zeros_mapped(kRef, t, 12.0, 14.9);
    REQUIRE(mapped.size() >= 3);
    // Every detected zero has a mapped partner nearby.  The first (deepest)
    // zero carries a known ~2-grid-spacing physical correction from the
    // next Bessel order; the rest land within one spacing.
    for (const double z : rep.zeros) {
        double best = 1e9;
        for (const double m : mapped) best = std::min(best, std::abs(z - m));
        CHECK(best < 3.0 * grid_dx);
    }
    CHECK(rep.mean_spacing > 0.0);
}

TEST_CASE("precursor zero spacing is independent of the incidence energy") {
    const double t = 0.05;
    const FieldScan s1 = make_scan_over_x(kRef, t, 12.0, 14.9, 364);
    const FieldScan s2 =
        make_scan_over_x({kRef.mu0, 2.0 * kRef.energy_k}, t, 12.0, 14.9, 364);
    const double m1 = precursor_zeros(s1).mean_spacing;
    const double m2 = precursor_zeros(s2).mean_spacing;
    CHECK(std::abs(m2 - m1) / m1 < 0.01);
}

TEST_CASE("precursor window guard") {
    CHECK_THROWS_AS(precursor_zeros(make_scan_over_x(kRef, 0.05, 1.0, 5.0, 100)),
                    std::invalid_argument);
}

TEST_CASE("j1_zeros_mapped") {
    const double t = 0.05;
    const double ct = kSpeedOfLight * t;
    const std::vector<double> roots = j1_zeros_mapped(kRef, t, 10.0, 14.95);
    REQUIRE(!roots.empty());
    // The largest x corresponds to the first J1 zero, eta ~ 3.8317.
    const double x1 = roots.back();
    const double eta1 = kRef.mu0 * std::sqrt(ct * ct - x1 * x1);
    CHECK(eta1 == doctest::Approx(3.83170597020751).epsilon(1e-10));
    CHECK_THROWS_AS(j1_zeros_mapped(kRef, t, 10.0, ct + 1.0), std::invalid_argument);
}

TEST_CASE("crossover depth between decay-tracking and forerunner regimes") {
    const DerivedParams d = derive_params(kRef);
    const FieldScan scan = make_scan_over_x(kRef, 0.05, 1e-3, 4.0 * d.x_p, 800);
    const double xc = crossover_depth(scan, kRef);
    // Measured boundary: 2.45 nm, somewhat beyond 3 x_p = 1.95 nm with the
    // 50%-persistence convention; frozen here as a regression value.
    CHECK(xc == doctest::Approx(2.45).epsilon(0.08));
    CHECK(xc < 4.0 * d.x_p);
}

TEST_CASE("crossover absent on a self-tracking scan") {
    // The stationary density tracks itself exactly: no crossover.
    FieldScan scan{ScanAxis::OverX, 0.05, {}, kRef};
    for (int i = 0; i <= 200; ++i) {
        const double x = 1e-3 + i * (2.5 / 200.0);
        scan.samples.push_back({x, phi_stationary(kRef, {x, 0.05})});
    }
    CHECK_THROWS_AS(crossover_depth(scan, kRef), std::runtime_error);
}

TEST_CASE("crossover at t = 0.3 fs: the tracking region extends past 4 x_p") {
    // By 0.3 fs the solution has relaxed onto the stationary density over
    // the whole [0, 4 x_p] window (max deviation ~3%), so the detector
    // honestly reports no crossover in range.
    const DerivedParams d = derive_params(kRef);
    const FieldScan scan = make_scan_over_x(kRef, 0.3, 1e-3, 4.0 * d.x_p, 400);
    CHECK_THROWS_AS(crossover_depth(scan, kRef), std::runtime_error);
}

TEST_CASE("diffraction pattern present at x = 0.4 nm") {
    const FieldScan scan = make_scan_over_t(kRef, 0.4, 1e-4, 0.4, 1200);
    CHECK(has_diffraction_pattern(scan));
    const OscillationReport rep = diffraction_pattern(scan);
    CHECK(rep.extrema.size() >= 7);  // >= 4 maxima + >= 3 minima
}

TEST_CASE("diffraction pattern absent at x = 3.0 nm") {
    const FieldScan scan = make_scan_over_t(kRef, 3.0, 1e-4, 0.4, 1200);
    CHECK(!has_diffraction_pattern(scan));
    CHECK_THROWS_AS(diffraction_pattern(scan), std::runtime_error);
}

TEST_CASE("negative control: absent for every probe beyond 2.5 x_p") {
    const DerivedParams d = derive_params(kRef);
    for (const double f : {2.6, 3.5, 5.0}) {
        const FieldScan scan =
            make_scan_over_t(kRef, f * d.x_p, 1e-4, 0.4, 900);
        CHECK(!has_diffraction_pattern(scan));
    }
}

TEST_CASE("free propagation is classified as non-diffraction") {
    // The free-limit density oscillates periodically without damping.
    FieldScan scan{ScanAxis::OverT, 1.0, {}, kRef};
    for (int i = 0; i <= 1200; ++i) {
        const double t = 1e-4 + i * (0.4 - 1e-4) / 1200.0;
        scan.samples.push_back({t, psi_free(kRef.energy_k, {1.0, t})});
    }
    CHECK(!has_diffraction_pattern(scan));
}

TEST_CASE("diffraction detector regime guard") {
    FieldScan scan = make_scan_over_t(kRef, 0.4, 1e-4, 0.4, 100);
    scan.params = {1.0, 0.5};
    CHECK_THROWS_AS(diffraction_pattern(scan), std::domain_error);
}

TEST_CASE("causality_scan is exactly zero for the analytic field") {
    for (const double t : {0.01, 0.3}) {
        std::vector<double> grid;
        const double ct = kSpeedOfLight * t;
        for (int i = 1; i <= 50; ++i) grid.push_back(ct * (1.0 + 0.1 * i));
        CHECK(causality_scan(kRef, t, grid) == 0.0);
    }
    // t = 0: the whole x > 0 region is dark.
    CHECK(causality_scan(kRef, 0.0, {0.1, 1.0, 5.0}) == 0.0);
}

TEST_CASE("detectors are deterministic") {
    const FieldScan a = make_scan_over_t(kRef, 0.4, 1e-4, 0.4, 600);
    const FieldScan b = make_scan_over_t(kRef, 0.4, 1e-4, 0.4, 600);
    const OscillationReport ra = diffraction_pattern(a);
    const OscillationReport rb = diffraction_pattern(b);
    REQUIRE(ra.extrema.size() == rb.extrema.size());
    for (size_t i = 0; i < ra.extrema.size(); ++i) {
        CHECK(ra.extrema[i].first == rb.extrema[i].first);
        CHECK(ra.extrema[i].second == rb.extrema[i].second);
    }
    CHECK(ra.mean_spacing == rb.mean_spacing);
}
