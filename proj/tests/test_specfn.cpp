#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "kgstep/specfn.hpp"

using namespace kgstep;

TEST_CASE("bessel_j_array at zero argument") {
    const BesselArray J = bessel_j_array(10, 0.0);
    CHECK(J.values[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(J.values[n]) < 1e-300);
}

TEST_CASE("bessel_j_array known values") {
    CHECK(bessel_j_array(1, 1.0).values[1] ==
          doctest::Approx(0.4400505857449335).epsilon(1e-14));
    CHECK(bessel_j_array(0, 1.0).values[0] ==
          doctest::Approx(0.7651976865579666).epsilon(1e-14));
    CHECK(bessel_j_array(2, 5.0).values[2] ==
          doctest::Approx(0.04656511627775222).epsilon(1e-12));
}

TEST_CASE("bessel_j_array matches std::cyl_bessel_j at small arguments") {
    for (const double eta : {0.3, 2.0, 6.5}) {
        const BesselArray J = bessel_j_array(12, eta);
        for (int n = 0; n <= 12; ++n) {
            const double ref = std::cyl_bessel_j(static_cast<double>(n), eta);
            CHECK(std::abs(J.values[n] - ref) < 5e-14);
        }
    }
}

TEST_CASE("bessel_j_array frozen large-argument references") {
    // std::cyl_bessel_j is only ~1e-8 accurate out here, so compare against
    // frozen 25-digit references instead.
    struct Ref { double eta; int n; double value; };
    const Ref refs[] = {
        {17.5, 0, -0.1031103982286859221733449},
        {17.5, 5, -0.1926790260503541002831934},
        {17.5, 12, -0.1212995023974937544458115},
        {63.368444665509465, 0, 0.09709453553881685255348491},
        {63.368444665509465, 5, -0.005362504702612159143625776},
        {63.368444665509465, 12, 0.06376588027298402616606865},
        {250.0, 0, -0.02605337342520423366439651},
        {250.0, 5, -0.04446943851215875468279443},
        {250.0, 12, -0.01270997868377897524481564},
    };
    for (const Ref& r : refs) {
        const BesselArray J = bessel_j_array(12, r.eta);
        CHECK(std::abs(J.values[r.n] - r.value) < 1e-14);
    }
}

TEST_CASE("bessel_j_array three-term recurrence residual") {
    for (const double eta : {0.1, 1.0, 10.0, 100.0, 460.0}) {
        const int n_max = static_cast<int>(eta) + 60;
        const BesselArray J = bessel_j_array(n_max, eta);
        for (int n = 1; n + 1 <= n_max; ++n) {
            const double res =
                J.values[n - 1] + J.values[n + 1] - (2.0 * n / eta) * J.values[n];
            CHECK(std::abs(res) < 1e-11);
        }
    }
}

TEST_CASE("bessel_j_array normalization identity") {
    for (const double eta : {0.5, 7.0, 80.0, 333.0}) {
        const int n_max = static_cast<int>(eta) + 60;
        const BesselArray J = bessel_j_array(n_max, eta);
        double s = J.values[0];
        for (int m = 2; m <= n_max; m += 2) s += 2.0 * J.values[m];
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("bessel_j_array large-argument asymptote") {
    // J_n(z) ~ sqrt(2/(pi z)) cos(z - n pi/2 - pi/4) for z >> n^2.
    const double z = 500.0;
    const BesselArray J = bessel_j_array(5, z);
    for (int n = 0; n <= 5; ++n) {
        const double asym =
            std::sqrt(2.0 / (M_PI * z)) * std::cos(z - n * M_PI_2 - M_PI_4);
        CHECK(std::abs(J.values[n] - asym) < 0.002);
    }
}

TEST_CASE("bessel_j_array reports a sane error estimate") {
    const BesselArray J = bessel_j_array(40, 25.0);
    CHECK(J.est_error > 0.0);
    CHECK(J.est_error < 1e-12);
    CHECK(J.order_max == 40);
    CHECK(J.arg == 25.0);
}

TEST_CASE("bessel_small_arg leading behavior") {
    CHECK(bessel_small_arg(0, 1e-4) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(bessel_small_arg(1, 1e-4) == doctest::Approx(0.5e-4).epsilon(1e-8));
    CHECK(bessel_small_arg(3, 2e-3) ==
          doctest::Approx(std::pow(1e-3, 3) / 6.0).epsilon(1e-6));
    // Agrees with the full evaluation in its regime.
    for (int n = 0; n <= 4; ++n) {
        const double eta = 0.01;
        CHECK(bessel_small_arg(n, eta) ==
              doctest::Approx(bessel_j_array(n, eta).values[n])
                  .epsilon(1e-4)
                  .scale(bessel_small_arg(n, eta)));
    }
}

namespace {

// Brute-force Lommel partial sum with term-by-term Bessel evaluation.
std::complex<double> lommel_brute(int n, std::complex<double> w, double z) {
    const int m_max = 220;
    const BesselArray J = bessel_j_array(n + 2 * m_max, z);
    std::complex<double> acc = 0.0;
    const std::complex<double> r = w / z;
    std::complex<double> pw = std::pow(r, n);
    for (int m = 0; m <= m_max; ++m) {
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        acc += sgn * pw * J.values[n + 2 * m];
        pw *= r * r;
    }
    return acc;
}

}  // namespace

TEST_CASE("lommel_u matches a brute-force partial sum at random arguments") {
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> uz(1.0, 60.0);
    std::uniform_real_distribution<double> ur(0.05, 0.9);
    std::uniform_real_distribution<double> uph(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 50; ++trial) {
        const double z = uz(rng);
        const double ratio = ur(rng), ph = uph(rng);
        const std::complex<double> w =
            ratio * z * std::complex<double>(std::cos(ph), std::sin(ph));
        for (const int n : {1, 3}) {
            double est = 0.0;
            const std::complex<double> v = lommel_u(n, w, z, &est);
            const std::complex<double> ref = lommel_brute(n, w, z);
            CHECK(std::abs(v - ref) < 1e-12);
            CHECK(est >= 0.0);
        }
    }
}

TEST_CASE("lommel_u argument validation") {
    CHECK_THROWS_AS(lommel_u(2, {0.1, 0.0}, 1.0), std::invalid_argument);
    // |w/z| >= 1 leaves the series' convergence domain.
    CHECK_THROWS_AS(lommel_u(1, {2.0, 0.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(lommel_u(3, {0.0, 5.0}, 5.0), std::domain_error);
}

TEST_CASE("lommel_u purely damped diagonal stays bounded") {
    // w = i eta/xi, z = eta with xi > 1: |w/z| = 1/xi < 1.
    const double eta = 30.0, xi = 2.5;
    const std::complex<double> w(0.0, eta / xi);
    const std::complex<double> u1 = lommel_u(1, w, eta);
    const std::complex<double> u3 = lommel_u(3, w, eta);
    CHECK(std::abs(u1) < 2.0);
    CHECK(std::abs(u3) < 2.0);
    CHECK(std::abs(u1 - u3) > 0.0);
}
