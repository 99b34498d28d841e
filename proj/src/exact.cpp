#include "kgstep/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "kgstep/specfn.hpp"

namespace kgstep {

namespace {

ComplexAmplitude zero_amplitude(Method m) {
    return ComplexAmplitude{{0.0, 0.0}, 0.0, {m, 0, 1.0, 0.0}};
}

void check_tol(double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-6))
        throw std::invalid_argument("tol must lie in [1e-14, 1e-6]");
}

int stable_series_length(double eta) {
    return static_cast<int>(std::ceil(eta)) +
           std::max(40, static_cast<int>(std::ceil(8.0 * std::cbrt(eta))));
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::StableSeries: return "stable_series";
        case Method::LiteralSeries: return "literal_series";
        case Method::CutoffAsymptote: return "cutoff_asymptote";
        case Method::Stationary: return "stationary";
        case Method::LommelApprox: return "lommel";
        case Method::Quadrature: return "quadrature";
    }
    return "unknown";
}

double cancellation_budget(const StepParams& p, const SpacetimePoint& pt) {
    const DerivedParams d = derive_params(p);
    const LightConeCoords lc = light_cone(p, pt);
    if (lc.region != Region::Interior)
        throw std::invalid_argument("cancellation_budget: Interior point required");
    return d.q * pt.x + lc.eta * std::log(lc.xi);
}

ComplexAmplitude psi_exact(const StepParams& p, const SpacetimePoint& pt, double tol) {
    check_tol(tol);
    const DerivedParams d = derive_params(p);
    const LightConeCoords lc = light_cone(p, pt);
    if (lc.region != Region::Interior) return zero_amplitude(Method::StableSeries);

    const double xi = lc.xi;
    const double eta = lc.eta;
    int n_max = stable_series_length(eta);

    for (int attempt = 0; attempt < 2; ++attempt) {
        const BesselArray J = bessel_j_array(n_max, eta);
        const std::complex<double> i(0.0, 1.0);

        std::complex<double> result = 0.0;
        double max_mag = 0.0;
        double tail = 0.0;
        int terms = 0;
        for (int s : {+1, -1}) {
            const std::complex<double> z = (s > 0) ? d.z_plus : d.z_minus;
            const std::complex<double> k = (s > 0) ? d.k_plus : d.k_minus;
            const std::complex<double> r = i * z / xi;  // |r| = 1/xi <= 1

            std::complex<double> acc = (i * z / (2.0 * xi)) * J.values[1];
            max_mag = std::max(max_mag, std::abs(k) * std::abs(acc));
            std::complex<double> pw = 1.0;
            for (int n = 1; n <= n_max; ++n) {
                pw *= -r;
                const std::complex<double> term = pw * J.values[n];
                acc += term;
                max_mag = std::max(max_mag, std::abs(k) * std::abs(term));
                ++terms;
            }
            tail = std::max(tail, 2.0 * std::abs(k) * std::abs(pw) * std::abs(J.values[n_max]));
            result += k * acc;
        }

        const double est = tail + 4.0 * J.est_error + 1e-15 * max_mag;
        if (est <= tol || attempt == 1) {
            ComplexAmplitude out;
            out.value = result;
            out.abs2 = std::norm(result);
            out.diag = {Method::StableSeries, terms,
                        std::max(1.0, max_mag / std::max(std::abs(result), 1e-300)), est};
            return out;
        }
        n_max = static_cast<int>(n_max * 1.3) + 60;
    }
    throw std::logic_error("psi_exact: unreachable");
}

ComplexAmplitude psi_free(double k, const SpacetimePoint& pt) {
    if (!(k > 0.0)) throw std::invalid_argument("psi_free: k must be positive");
    const double ct = kSpeedOfLight * pt.t;
    ComplexAmplitude out = zero_amplitude(Method::StableSeries);
    if (pt.x < ct) {
        const std::complex<double> i(0.0, 1.0);
        out.value = std::exp(i * (k * (pt.x - ct))) - 1.0;
        out.abs2 = std::norm(out.value);
        out.diag.est_error = 1e-15;
    }
    return out;
}

ComplexAmplitude phi_stationary(const StepParams& p, const SpacetimePoint& pt) {
    const DerivedParams d = derive_params(p);
    const double ct = kSpeedOfLight * pt.t;
    const std::complex<double> i(0.0, 1.0);
    ComplexAmplitude out;
    out.value = d.k_plus * std::exp(-d.q * pt.x) * std::exp(-i * (p.energy_k * ct));
    out.abs2 = std::norm(out.value);
    out.diag = {Method::Stationary, 1, 1.0, 1e-15 * std::abs(out.value)};
    return out;
}

ComplexAmplitude psi_cutoff_asym(const StepParams& p, const SpacetimePoint& pt) {
    const LightConeCoords lc = light_cone(p, pt);
    if (lc.region == Region::Exterior)
        throw std::invalid_argument("psi_cutoff_asym: Interior point required");
    if (lc.region == Region::OnCone) return zero_amplitude(Method::CutoffAsymptote);
    const BesselArray J = bessel_j_array(1, lc.eta);
    const std::complex<double> i(0.0, 1.0);
    ComplexAmplitude out;
    out.value = -(2.0 * i * p.energy_k / (p.mu0 * lc.xi)) * J.values[1];
    out.abs2 = std::norm(out.value);
    out.diag = {Method::CutoffAsymptote, 1, 1.0, J.est_error};
    return out;
}

ComplexAmplitude psi_lommel(const StepParams& p, const SpacetimePoint& pt) {
    const DerivedParams d = derive_params(p);
    (void)d;
    if (p.mu0 / p.energy_k < 10.0)
        throw std::domain_error("psi_lommel: low-energy regime mu0/E >= 10 required");
    const LightConeCoords lc = light_cone(p, pt);
    if (lc.region != Region::Interior)
        throw std::invalid_argument("psi_lommel: Interior point required");

    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> w = i * lc.eta / lc.xi;
    double e1 = 0.0, e3 = 0.0;
    const std::complex<double> u1 = lommel_u(1, w, lc.eta, &e1);
    const std::complex<double> u3 = lommel_u(3, w, lc.eta, &e3);
    const double ct = kSpeedOfLight * pt.t;
    ComplexAmplitude out;
    out.value = 2.0 * (p.energy_k / p.mu0) * (u3 - u1) * std::exp(-i * (p.energy_k * ct));
    out.abs2 = std::norm(out.value);
    out.diag = {Method::LommelApprox, 0, 1.0, 2.0 * (p.energy_k / p.mu0) * (e1 + e3)};
    return out;
}

ComplexAmplitude psi_auto(const StepParams& p, const SpacetimePoint& pt, double tol) {
    check_tol(tol);
    const LightConeCoords lc = light_cone(p, pt);
    if (lc.region != Region::Interior) return zero_amplitude(Method::StableSeries);
    const double ct = kSpeedOfLight * pt.t;
    if ((ct - pt.x) / ct < 1e-6) return psi_cutoff_asym(p, pt);
    return psi_exact(p, pt, tol);
}

}  // namespace kgstep
