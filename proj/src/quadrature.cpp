#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "kgstep/oracle.hpp"

namespace kgstep {

namespace {

using C = std::complex<double>;
using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr double kTwoPi = 6.283185307179586476925287;

struct Integrand {
    double pref;   // 2E/mu0
    double two_e_over_mu0;
    double a_lin;  // mu0 (x - ct) / 2   (negative inside the cone)
    double a_inv;  // mu0 (x + ct) / 2
    C operator()(C u) const {
        const C u2 = u * u;
        const C denom = u2 * (u2 - two_e_over_mu0 * u + 1.0);
        const C phase = C(0.0, 1.0) * (a_lin * u - a_inv / u);
        return pref * (1.0 - u2) / denom * std::exp(phase);
    }
};

struct SegmentResult {
    C value{0.0, 0.0};
    double err = 0.0;
};

// Adaptive (or fixed-panel) integration of a complex-valued integrand over a
// real parameter interval, done as two real quadratures.
SegmentResult integrate_segment(const std::function<C(double)>& g, double lo, double hi,
                                const QuadratureSpec& spec) {
    SegmentResult out;
    if (!(hi > lo)) return out;
    auto re = [&g](double s) { return g(s).real(); };
    auto im = [&g](double s) { return g(s).imag(); };
    if (spec.rule == QuadRule::Adaptive) {
        double er = 0.0, ei = 0.0;
        const double vr = GK::integrate(re, lo, hi, 15, 1e-12, &er);
        const double vi = GK::integrate(im, lo, hi, 15, 1e-12, &ei);
        out.value = {vr, vi};
        out.err = er + ei;
    } else {
        const int panels = std::max(spec.n_nodes, 8);
        const double h = (hi - lo) / panels;
        for (int i = 0; i < panels; ++i) {
            double er = 0.0, ei = 0.0;
            const double a = lo + i * h, b = a + h;
            out.value += C(GK::integrate(re, a, b, 0, 0.0, &er),
                           GK::integrate(im, a, b, 0, 0.0, &ei));
            out.err += er + ei;
        }
    }
    return out;
}

}  // namespace

ComplexAmplitude bromwich_quadrature(const StepParams& p, const SpacetimePoint& pt,
                                     const QuadratureSpec& spec) {
    const DerivedParams d = derive_params(p);
    const double ct = kSpeedOfLight * pt.t;
    const double q_over_mu0 = d.q / p.mu0;

    double gamma = spec.gamma;
    if (gamma == 0.0) gamma = 2.0 * std::max(q_over_mu0, 1.0);
    if (gamma <= q_over_mu0)
        throw std::invalid_argument(
            "bromwich_quadrature: gamma must exceed q/mu0 (contour must pass above the poles)");

    Integrand F;
    F.pref = 2.0 * p.energy_k / p.mu0;
    F.two_e_over_mu0 = 2.0 * p.energy_k / p.mu0;
    F.a_lin = 0.5 * p.mu0 * (pt.x - ct);
    F.a_inv = 0.5 * p.mu0 * (pt.x + ct);

    const LightConeCoords lc = light_cone(p, pt);

    C total(0.0, 0.0);
    double err = 0.0;
    double tail_bound = 0.0;

    if (lc.region != Region::Interior) {
        // x >= ct: the line integrand decays for Im u -> +inf, so integrate
        // the segment [-A, A] + i*gamma and close the ends with upward
        // vertical tails (the rectangle at infinity contributes nothing).
        const double A = (spec.u_max > 0.0) ? spec.u_max : std::max(12.0, 4.0 * gamma);
        const double rate = std::max(0.5 * p.mu0 * (pt.x - ct), 1e-3);
        const double S = 40.0 / rate;

        auto horiz = [&](double v) { return F(C(v, gamma)); };
        auto vert_r = [&](double s) { return F(C(A, gamma + s)) * C(0.0, 1.0); };
        auto vert_l = [&](double s) { return F(C(-A, gamma + s)) * C(0.0, 1.0); };

        SegmentResult r1 = integrate_segment(horiz, -A, A, spec);
        SegmentResult r2 = integrate_segment(vert_r, 0.0, S, spec);
        SegmentResult r3 = integrate_segment(vert_l, 0.0, S, spec);
        total = r1.value + r2.value - r3.value;
        err = r1.err + r2.err + r3.err;
        tail_bound = 2.0 * F.pref * std::exp(-rate * S) / rate;
    } else {
        // Deformed path: ascending 45-degree tail from the lower-left into
        // (-a, 0), real segments, semicircular arc of radius rho over the
        // poles |u| = 1, descending 45-degree tail from (a, 0).
        const double xi = lc.xi;
        const double a = (spec.u_max > 0.0) ? spec.u_max : 1.5 * std::max(xi, 1.2);
        double rho = (spec.arc_rho > 0.0) ? spec.arc_rho : 1.0 + 0.5 * std::min(xi - 1.0, 2.0);
        if (!(rho > 1.0 && rho < xi + 1e-9))
            throw std::invalid_argument("bromwich_quadrature: arc_rho must lie in (1, xi)");
        if (a <= rho)
            throw std::invalid_argument("bromwich_quadrature: u_max must exceed the arc radius");

        const double rate = 0.5 * p.mu0 * (ct - pt.x) / std::sqrt(2.0);
        const double S = 40.0 / rate;
        const C dir_dn(M_SQRT1_2, -M_SQRT1_2);   // down-right 45 degrees
        const C dir_dl(-M_SQRT1_2, -M_SQRT1_2);  // down-left 45 degrees

        // Left tail descends into the lower-left from (-a, 0); the contour
        // traverses it from depth upward, hence the minus sign on rl below.
        auto tail_l = [&](double s) { return F(C(-a, 0.0) + s * dir_dl) * dir_dl; };
        // Right tail: u = a + s*dir_dn.
        auto tail_r = [&](double s) { return F(C(a, 0.0) + s * dir_dn) * dir_dn; };
        auto seg_l = [&](double v) { return F(C(v, 0.0)); };
        auto seg_r = seg_l;
        auto arc = [&](double th) {
            const C u = rho * std::exp(C(0.0, th));
            return F(u) * (u * C(0.0, 1.0));
        };

        // The tails are integrated from s = S down to 0 on the left (sign
        // absorbed by orientation below); the arc runs theta: pi -> 0.
        SegmentResult rl = integrate_segment(tail_l, 0.0, S, spec);
        SegmentResult rsl = integrate_segment(seg_l, -a, -rho, spec);
        SegmentResult rsr = integrate_segment(seg_r, rho, a, spec);
        SegmentResult rr = integrate_segment(tail_r, 0.0, S, spec);

        // Split the arc around the upper pole angle for the adaptive rule.
        const double th_pole = std::atan2(q_over_mu0, p.energy_k / p.mu0);
        const double dth = std::min(0.4, std::max(4.0 * (rho - 1.0), 1e-3));
        SegmentResult ra;
        double knots[4] = {M_PI, std::min(M_PI, th_pole + dth), std::max(0.0, th_pole - dth), 0.0};
        for (int i = 0; i < 3; ++i) {
            // theta decreasing: integrate [knots[i+1], knots[i]] and negate.
            SegmentResult r = integrate_segment(arc, knots[i + 1], knots[i], spec);
            ra.value -= r.value;
            ra.err += r.err;
        }

        total = (-rl.value) + rsl.value + ra.value + rsr.value + rr.value;
        err = rl.err + rsl.err + ra.err + rsr.err + rr.err;
        const double end_mag = std::abs(F(C(a, 0.0) + S * dir_dn));
        tail_bound = 2.0 * end_mag / rate;
    }

    const C value = total / C(0.0, kTwoPi);
    ComplexAmplitude out;
    out.value = value;
    out.abs2 = std::norm(value);
    out.diag = {Method::Quadrature, 0, 1.0, (err + tail_bound) / kTwoPi};
    return out;
}

}  // namespace kgstep
