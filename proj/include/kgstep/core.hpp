#pragma once

#include <complex>

// Unit convention used throughout: lengths in nm, times in fs, energies in eV.
// Wavenumbers and the barrier mass parameter are in 1/nm.

namespace kgstep {

inline constexpr double kSpeedOfLight = 299.792458;  // nm / fs (exact, CODATA)
inline constexpr double kHbarC = 197.3269804;        // eV * nm

// Physical configuration of the step barrier plus incident wave.
struct StepParams {
    double mu0;       // barrier mass parameter m0*c/hbar  [1/nm]
    double energy_k;  // incident wavenumber E_r/(hbar*c)  [1/nm]
};

// Spectral quantities derived from StepParams.  In the evanescent regime
// (energy_k < mu0) the decay constant q = sqrt(mu0^2 - E^2) is real.
struct DerivedParams {
    double q;    // evanescent decay constant  [1/nm]
    double x_p;  // penetration length 1/q     [nm]
    std::complex<double> k_plus, k_minus;  // 2E/(E +- iq)
    std::complex<double> z_plus, z_minus;  // (E +- iq)/mu0, unit modulus
};

struct SpacetimePoint {
    double x;  // nm, x >= 0 (inside the barrier)
    double t;  // fs, t >= 0
};

enum class Region { Interior, OnCone, Exterior };

// Light-cone coordinates.  xi and eta are only meaningful for Interior
// points; OnCone/Exterior carry eta = 0 and xi = NaN as sentinels since
// xi diverges on the cone.
struct LightConeCoords {
    double xi;   // [(ct+x)/(ct-x)]^(1/2), >= 1
    double eta;  // mu0*sqrt(c^2 t^2 - x^2), >= 0
    Region region;
};

// Throws std::invalid_argument on non-positive inputs and std::domain_error
// when energy_k >= mu0 (propagating regime unsupported).
DerivedParams derive_params(const StepParams& p);

// E_r [eV] -> E_r/(hbar*c) [1/nm].  Throws std::invalid_argument for E_r <= 0.
double energy_to_wavenumber(double energy_ev);

// Total function; classifies the region with a relative band
// |ct - x| <= 1e-12 * max(ct, x, 1) for OnCone.
LightConeCoords light_cone(const StepParams& p, const SpacetimePoint& pt);

}  // namespace kgstep
