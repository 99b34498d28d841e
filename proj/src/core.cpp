#include "kgstep/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kgstep {

DerivedParams derive_params(const StepParams& p) {
    if (!(p.mu0 > 0.0) || !std::isfinite(p.mu0))
        throw std::invalid_argument("derive_params: mu0 must be positive and finite");
    if (!(p.energy_k > 0.0) || !std::isfinite(p.energy_k))
        throw std::invalid_argument("derive_params: energy_k must be positive and finite");
    if (p.energy_k >= p.mu0)
        throw std::domain_error("derive_params: propagating regime unsupported (energy_k >= mu0)");

    const double E = p.energy_k;
    const double q = std::sqrt((p.mu0 - E) * (p.mu0 + E));
    const std::complex<double> iq(0.0, q);
    DerivedParams d;
    d.q = q;
    d.x_p = 1.0 / q;
    d.k_plus = 2.0 * E / (E + iq);
    d.k_minus = 2.0 * E / (E - iq);
    d.z_plus = (E + iq) / p.mu0;
    d.z_minus = (E - iq) / p.mu0;
    return d;
}

double energy_to_wavenumber(double energy_ev) {
    if (!(energy_ev > 0.0) || !std::isfinite(energy_ev))
        throw std::invalid_argument("energy_to_wavenumber: energy must be positive");
    return energy_ev / kHbarC;
}

LightConeCoords light_cone(const StepParams& p, const SpacetimePoint& pt) {
    const double ct = kSpeedOfLight * pt.t;
    const double x = pt.x;
    const double band = 1e-12 * std::max({ct, x, 1.0});
    LightConeCoords lc;
    lc.xi = std::numeric_limits<double>::quiet_NaN();
    lc.eta = 0.0;
    if (std::abs(ct - x) <= band) {
        lc.region = Region::OnCone;
    } else if (x > ct) {
        lc.region = Region::Exterior;
    } else {
        lc.region = Region::Interior;
        lc.xi = std::sqrt((ct + x) / (ct - x));
        lc.eta = p.mu0 * std::sqrt((ct - x) * (ct + x));
    }
    return lc;
}

}  // namespace kgstep
