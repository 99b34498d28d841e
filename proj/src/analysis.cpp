#include "kgstep/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kgstep/specfn.hpp"

namespace kgstep {

namespace {

void require_axis(const FieldScan& scan, ScanAxis axis, const char* who) {
    if (scan.axis != axis)
        throw std::invalid_argument(std::string(who) + ": wrong scan axis");
    if (scan.samples.size() < 3)
        throw std::invalid_argument(std::string(who) + ": scan too short");
}

// Local extrema of f(coord); plateau-insensitive (strict left, non-strict right),
// which also makes detection deterministic on exact ties.
template <class Getter>
std::vector<std::pair<double, double>> local_extrema(
    const std::vector<std::pair<double, ComplexAmplitude>>& s, Getter f, bool maxima) {
    std::vector<std::pair<double, double>> out;
    for (size_t i = 1; i + 1 < s.size(); ++i) {
        const double a = f(s[i - 1].second), b = f(s[i].second), c = f(s[i + 1].second);
        if (maxima ? (b > a && b >= c) : (b < a && b <= c)) out.push_back({s[i].first, b});
    }
    return out;
}

}  // namespace

FieldScan make_scan_over_x(const StepParams& p, double t, double x_lo, double x_hi,
                           int n, double tol) {
    if (n < 2 || !(x_hi > x_lo)) throw std::invalid_argument("make_scan_over_x: bad grid");
    FieldScan scan{ScanAxis::OverX, t, {}, p};
    scan.samples.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / (n - 1);
        scan.samples.push_back({x, psi_auto(p, {x, t}, tol)});
    }
    return scan;
}

FieldScan make_scan_over_t(const StepParams& p, double x, double t_lo, double t_hi,
                           int n, double tol) {
    if (n < 2 || !(t_hi > t_lo)) throw std::invalid_argument("make_scan_over_t: bad grid");
    FieldScan scan{ScanAxis::OverT, x, {}, p};
    scan.samples.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (n - 1);
        scan.samples.push_back({t, psi_auto(p, {x, t}, tol)});
    }
    return scan;
}

PeakReport detect_peak(const FieldScan& scan) {
    require_axis(scan, ScanAxis::OverT, "detect_peak");
    const auto& s = scan.samples;
    size_t best = 0;
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i].second.abs2 > s[best].second.abs2) best = i;  // strict >: earliest tie-break
    if (best == 0 || best + 1 == s.size())
        throw std::runtime_error("detect_peak: no interior maximum (monotone scan)");
    const double ym = s[best - 1].second.abs2, y0 = s[best].second.abs2,
                 yp = s[best + 1].second.abs2;
    if (!(y0 > ym || y0 > yp))
        throw std::runtime_error("detect_peak: no interior maximum (flat scan)");
    const double denom = ym - 2.0 * y0 + yp;
    const double dt = s[1].first - s[0].first;
    double shift = 0.0;
    if (denom < 0.0) shift = 0.5 * (ym - yp) / denom;
    PeakReport r;
    r.t_peak = s[best].first + shift * dt;
    r.peak_value = y0 - 0.25 * (ym - yp) * shift;
    r.x = scan.fixed_value;
    return r;
}

OscillationReport precursor_zeros(const FieldScan& scan) {
    require_axis(scan, ScanAxis::OverX, "precursor_zeros");
    const double ct = kSpeedOfLight * scan.fixed_value;
    const auto& s = scan.samples;
    if (s.front().first < 0.7 * ct - 1e-9 || s.back().first >= ct)
        throw std::invalid_argument("precursor_zeros: window must lie in [0.7*ct, ct)");

    // Fixed t means e^{+iEct} is a constant de-phasing rotation.
    const double phase = scan.params.energy_k * ct;
    const std::complex<double> rot(std::cos(phase), std::sin(phase));
    auto re_dephased = [&rot](const ComplexAmplitude& a) { return (a.value * rot).real(); };

    OscillationReport rep;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        const double a = re_dephased(s[i].second), b = re_dephased(s[i + 1].second);
        if (a == 0.0) {
            rep.zeros.push_back(s[i].first);
        } else if (a * b < 0.0) {
            const double f = a / (a - b);
            rep.zeros.push_back(s[i].first + f * (s[i + 1].first - s[i].first));
        }
    }
    if (rep.zeros.size() < 3)
        throw std::runtime_error("precursor_zeros: fewer than 3 zeros found");

    rep.extrema = local_extrema(s, re_dephased, true);
    auto minima = local_extrema(s, re_dephased, false);
    rep.extrema.insert(rep.extrema.end(), minima.begin(), minima.end());
    std::sort(rep.extrema.begin(), rep.extrema.end());

    for (size_t i = 0; i + 1 < rep.zeros.size(); ++i)
        rep.zero_spacings.push_back(rep.zeros[i + 1] - rep.zeros[i]);
    double m = 0.0;
    for (double v : rep.zero_spacings) m += v;
    rep.mean_spacing = m / rep.zero_spacings.size();
    return rep;
}

std::vector<double> j1_zeros_mapped(const StepParams& p, double t, double x_lo,
                                    double x_hi) {
    const double ct = kSpeedOfLight * t;
    if (!(x_hi > x_lo) || x_hi >= ct)
        throw std::invalid_argument("j1_zeros_mapped: window must lie inside the cone");
    auto eta_of = [&](double x) { return p.mu0 * std::sqrt((ct - x) * (ct + x)); };
    const double eta_hi = eta_of(x_lo), eta_lo = eta_of(x_hi);  // eta decreases with x

    auto j1 = [](double eta) { return bessel_j_array(1, eta).values[1]; };
    std::vector<double> roots;
    // McMahon initial guesses j_{1,m} ~ (m + 1/4) pi, refined by bisection.
    for (int m = 1;; ++m) {
        const double guess = (m + 0.25) * M_PI;
        if (guess - 2.0 > eta_hi) break;
        double lo = guess - 1.2, hi = guess + 1.2;
        double flo = j1(lo), fhi = j1(hi);
        if (flo * fhi > 0.0) continue;  // guess band missed the root (never for m >= 1)
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = j1(mid);
            if (flo * fm <= 0.0) {
                hi = mid;
                fhi = fm;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        const double root = 0.5 * (lo + hi);
        if (root >= eta_lo && root <= eta_hi) {
            const double x = std::sqrt(ct * ct - (root / p.mu0) * (root / p.mu0));
            if (x >= x_lo && x <= x_hi) roots.push_back(x);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double crossover_depth(const FieldScan& scan, const StepParams& p) {
    require_axis(scan, ScanAxis::OverX, "crossover_depth");
    const DerivedParams d = derive_params(p);
    const double k2 = std::norm(d.k_plus);
    const auto& s = scan.samples;
    std::vector<double> dev(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        const double phi2 = k2 * std::exp(-2.0 * d.q * s[i].first);
        dev[i] = std::abs(s[i].second.abs2 / phi2 - 1.0);
    }
    // Persistently > 50%: above threshold from some index to the end of the
    // scan, with at least one tracking sample before it.
    size_t start = s.size();
    for (size_t i = s.size(); i-- > 0;) {
        if (dev[i] > 0.5)
            start = i;
        else
            break;
    }
    if (start == s.size() || start == 0)
        throw std::runtime_error("crossover_depth: no crossover in range");
    return s[start].first;
}

OscillationReport diffraction_pattern(const FieldScan& scan) {
    require_axis(scan, ScanAxis::OverT, "diffraction_pattern");
    const StepParams& p = scan.params;
    if (p.mu0 / p.energy_k < 10.0)
        throw std::domain_error("diffraction_pattern: low-energy regime mu0/E >= 10 required");
    const double x = scan.fixed_value;
    const double t0 = x / kSpeedOfLight;
    const DerivedParams d = derive_params(p);
    const double phi2 = std::norm(d.k_plus) * std::exp(-2.0 * d.q * x);
    const auto& s = scan.samples;

    auto fail = [](const char* why) -> OscillationReport {
        throw std::runtime_error(std::string("diffraction_pattern: pattern absent (") + why + ")");
    };

    // Front arrival: nothing before t0.
    for (const auto& [t, a] : s)
        if (t < t0 && a.abs2 > 1e-20) return fail("signal before front arrival");

    auto abs2 = [](const ComplexAmplitude& a) { return a.abs2; };
    std::vector<std::pair<double, ComplexAmplitude>> after;
    for (const auto& smp : s)
        if (smp.first > t0) after.push_back(smp);
    if (after.size() < 16) return fail("too few samples after the front");

    auto maxima = local_extrema(after, abs2, true);
    auto minima = local_extrema(after, abs2, false);
    if (maxima.size() < 4) return fail("fewer than 4 maxima");

    // Monotone rise from the front to the first maximum.
    for (size_t i = 0; i + 1 < after.size() && after[i + 1].first <= maxima[0].first; ++i)
        if (after[i + 1].second.abs2 < after[i].second.abs2 * (1.0 - 1e-9))
            return fail("rise to first maximum is not monotone");

    const size_t n_check = std::min<size_t>(maxima.size(), 5);
    for (size_t i = 0; i + 1 < n_check; ++i)
        if (!(maxima[i + 1].second < maxima[i].second)) return fail("envelope not decreasing");
    for (size_t i = 0; i < std::min<size_t>(maxima.size(), 4); ++i)
        if (!(maxima[i].second > phi2)) return fail("maxima below the stationary level");
    for (size_t i = 0; i < std::min<size_t>(minima.size(), 3); ++i) {
        if (!(minima[i].second < phi2)) return fail("minima above the stationary level");
        if (!(minima[i].second > 0.3 * phi2))
            return fail("minima collapse far below the stationary level");
    }

    OscillationReport rep;
    rep.extrema = maxima;
    rep.extrema.insert(rep.extrema.end(), minima.begin(), minima.end());
    std::sort(rep.extrema.begin(), rep.extrema.end());
    for (size_t i = 0; i + 1 < maxima.size(); ++i)
        rep.zero_spacings.push_back(maxima[i + 1].first - maxima[i].first);
    double m = 0.0;
    for (double v : rep.zero_spacings) m += v;
    rep.mean_spacing = rep.zero_spacings.empty() ? 0.0 : m / rep.zero_spacings.size();
    return rep;
}

bool has_diffraction_pattern(const FieldScan& scan) {
    try {
        diffraction_pattern(scan);
        return true;
    } catch (const std::runtime_error&) {
        return false;
    }
}

double causality_scan(const StepParams& p, double t, const std::vector<double>& x_grid) {
    const double ct = kSpeedOfLight * t;
    double worst = 0.0;
    for (double x : x_grid) {
        if (x <= ct) continue;
        worst = std::max(worst, psi_auto(p, {x, t}).abs2);
    }
    return worst;
}

}  // namespace kgstep
