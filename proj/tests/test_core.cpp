#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kgstep/core.hpp"

using namespace kgstep;

namespace {
const StepParams kRef{1.542, 5.064e-2};
}

TEST_CASE("derive_params reproduces the reference configuration") {
    const DerivedParams d = derive_params(kRef);
    CHECK(d.q == doctest::Approx(1.541168255058480).epsilon(1e-15));
    CHECK(d.x_p == doctest::Approx(0.648858420693369).epsilon(1e-15));
    CHECK(std::norm(d.k_plus) == doctest::Approx(0.0043139850716892).epsilon(1e-12));
    // 2 x_p computed from the stated inputs is 1.2977 nm, not 1.317 nm.
    CHECK(2.0 * d.x_p == doctest::Approx(1.29771684).epsilon(1e-7));
}

TEST_CASE("derive_params algebraic invariants") {
    const DerivedParams d = derive_params(kRef);
    const double E = kRef.energy_k, mu0 = kRef.mu0;
    CHECK(d.q * d.q + E * E == doctest::Approx(mu0 * mu0).epsilon(1e-15));
    CHECK(std::abs(d.z_plus) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(d.z_minus) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(d.k_plus - std::conj(d.k_minus)) < 1e-15);
    // k+ z+ = k- z- = 2E/mu0 (the pole residues agree pairwise).
    CHECK(std::abs(d.k_plus * d.z_plus - 2.0 * E / mu0) < 1e-15);
    CHECK(std::abs(d.k_minus * d.z_minus - 2.0 * E / mu0) < 1e-15);
    // k+ + k- = k+ k- = 4E^2/mu0^2 (since |E + iq| = mu0).
    const double four_e2 = 4.0 * E * E / (mu0 * mu0);
    CHECK(std::abs(d.k_plus + d.k_minus - four_e2) < 1e-15);
    CHECK(std::abs(d.k_plus * d.k_minus - four_e2) < 1e-15);
}

TEST_CASE("derive_params simple arithmetic case") {
    const DerivedParams d = derive_params({1.0, 0.5});
    CHECK(d.q == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    CHECK(d.x_p == doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-15));
}

TEST_CASE("derive_params rejects bad parameters") {
    CHECK_THROWS_AS(derive_params({-1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(derive_params({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(derive_params({1.0, -0.1}), std::invalid_argument);
    // Propagating regime (E >= mu0) is out of scope.
    CHECK_THROWS_AS(derive_params({1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(derive_params({1.0, 1.5}), std::domain_error);
}

TEST_CASE("energy_to_wavenumber") {
    // 10 eV -> 10/hbar-c = 5.0677e-2 1/nm (the reference text's rounded
    // 5.064e-2 is kept as a literal input elsewhere; see README).
    CHECK(energy_to_wavenumber(10.0) ==
          doctest::Approx(10.0 / kHbarC).epsilon(1e-15));
    CHECK(energy_to_wavenumber(10.0) == doctest::Approx(5.0677e-2).epsilon(1e-4));
    CHECK_THROWS_AS(energy_to_wavenumber(0.0), std::invalid_argument);
    CHECK_THROWS_AS(energy_to_wavenumber(-3.0), std::invalid_argument);
}

TEST_CASE("light_cone classification") {
    const double c = kSpeedOfLight;
    SUBCASE("interior") {
        const LightConeCoords lc = light_cone(kRef, {1.0, 0.05});
        CHECK(lc.region == Region::Interior);
        CHECK(lc.xi >= 1.0);
        CHECK(lc.eta > 0.0);
    }
    SUBCASE("exterior") {
        const LightConeCoords lc = light_cone(kRef, {c * 0.05 + 1.0, 0.05});
        CHECK(lc.region == Region::Exterior);
        CHECK(std::isnan(lc.xi));
        CHECK(lc.eta == 0.0);
    }
    SUBCASE("on the cone") {
        const LightConeCoords lc = light_cone(kRef, {c * 0.05, 0.05});
        CHECK(lc.region == Region::OnCone);
        CHECK(std::isnan(lc.xi));
        CHECK(lc.eta == 0.0);
    }
    SUBCASE("t = 0 puts every x > 0 outside the cone") {
        CHECK(light_cone(kRef, {0.5, 0.0}).region == Region::Exterior);
    }
}

TEST_CASE("light_cone frozen coordinates at (x=80 nm, t=0.3 fs)") {
    const LightConeCoords lc = light_cone(kRef, {80.0, 0.3});
    CHECK(lc.xi == doctest::Approx(4.135244165357064).epsilon(1e-14));
    CHECK(lc.eta == doctest::Approx(63.368444665509465).epsilon(1e-14));
}

TEST_CASE("light_cone coordinate identities") {
    // eta * xi = mu0 (ct + x), eta / xi = mu0 (ct - x).
    for (const SpacetimePoint pt : {SpacetimePoint{0.5, 0.01},
                                    SpacetimePoint{9.0, 0.3},
                                    SpacetimePoint{80.0, 0.3}}) {
        const LightConeCoords lc = light_cone(kRef, pt);
        REQUIRE(lc.region == Region::Interior);
        const double ct = kSpeedOfLight * pt.t;
        CHECK(lc.eta * lc.xi ==
              doctest::Approx(kRef.mu0 * (ct + pt.x)).epsilon(1e-13));
        CHECK(lc.eta / lc.xi ==
              doctest::Approx(kRef.mu0 * (ct - pt.x)).epsilon(1e-13));
    }
}

TEST_CASE("light_cone at x = 0 degenerates to xi = 1") {
    const LightConeCoords lc = light_cone(kRef, {0.0, 0.1});
    CHECK(lc.region == Region::Interior);
    CHECK(lc.xi == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(lc.eta ==
          doctest::Approx(kRef.mu0 * kSpeedOfLight * 0.1).epsilon(1e-15));
}
