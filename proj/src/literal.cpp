// Direct evaluation of the printed series forms.  These suffer destructive
// cancellation between the exponential term e^{+-qx - iEct} and the
// sum_{n} (xi / i z)^n J_n(eta) series: intermediates reach e^{qx + eta ln xi}
// while the result stays O(1).  When that budget exceeds what double can
// absorb (~25 in log magnitude) the evaluation runs in a wider
// floating-point type and is rounded back at the end.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kgstep/exact.hpp"

namespace kgstep {

namespace {

using std::abs;
using std::cos;
using std::exp;
using std::max;
using std::sin;
using std::sqrt;

using boost::multiprecision::cpp_bin_float;
using boost::multiprecision::number;
using f130 = number<cpp_bin_float<130>>;
using f290 = number<cpp_bin_float<290>>;

// Minimal complex-over-R; std::complex is only specified for builtin types.
template <class R>
struct Cx {
    R re{}, im{};
    Cx() = default;
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator*(const Cx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cx operator*(const R& s) const { return {re * s, im * s}; }
    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    R norm2() const { return re * re + im * im; }
};

template <class R>
double to_double(const R& v) {
    return static_cast<double>(v);
}

// Miller's downward recurrence in type R, with enough guard orders that the
// contamination of the dominant solution is below `digits10` decimals.
template <class R>
std::vector<R> miller_bessel(int n_max, const R& eta, int digits10) {
    std::vector<R> J(n_max + 1, R(0));
    if (eta < R(1e-30)) {
        J[0] = R(1);
        return J;
    }
    const double eta_d = to_double(eta);
    int n_start = std::max(n_max, static_cast<int>(std::ceil(eta_d)));
    double decades = 0.0;
    while (decades < digits10 + 10.0) {
        ++n_start;
        decades += std::log10(std::max(2.0 * n_start / eta_d, 1.05));
    }
    n_start += 10;

    const R big = R(1e200), small = R(1e-200);
    R fp(0), fc(1), norm(0);
    for (int n = n_start; n >= 0; --n) {
        if (n <= n_max) J[n] = fc;
        if (n == 0)
            norm += fc;
        else if (n % 2 == 0)
            norm += 2 * fc;
        if (n > 0) {
            R fm = (R(2 * n) / eta) * fc - fp;
            fp = fc;
            fc = fm;
            if (abs(fc) > big) {
                fc *= small;
                fp *= small;
                norm *= small;
                for (auto& v : J) v *= small;
            }
        }
    }
    for (auto& v : J) v /= norm;
    return J;
}

struct LiteralResult {
    std::complex<double> value;
    double cancellation_ratio;
    double est_error;
    int terms_used;
};

enum class Grouping { Symmetric, Regrouped };

// Evaluates either printed grouping of the interior solution in type R.
template <class R>
LiteralResult eval_literal(const StepParams& p, const SpacetimePoint& pt, int n_max,
                           int digits10, Grouping grouping) {
    const R x(pt.x), t(pt.t);
    const R c(kSpeedOfLight);
    const R ct = c * t;
    const R mu0(p.mu0), E(p.energy_k);
    const R q = sqrt((mu0 - E) * (mu0 + E));
    const R xi = sqrt((ct + x) / (ct - x));
    const R eta = mu0 * sqrt((ct - x) * (ct + x));
    const R mu0_sq = mu0 * mu0;

    const std::vector<R> J = miller_bessel<R>(n_max, eta, digits10);

    const R cos_p = cos(E * ct), sin_p = sin(E * ct);
    const Cx<R> carrier{cos_p, R(0) - sin_p};  // e^{-iEct}

    R max_mag2(0);
    auto track = [&max_mag2](const Cx<R>& v) {
        const R m = v.norm2();
        if (m > max_mag2) max_mag2 = m;
    };

    Cx<R> result{R(0), R(0)};
    int terms = 0;
    R tail2(0);

    auto branch_sum = [&](int s, int n_lo) {
        // omega = xi / (i z_s) = xi (-s q - iE) / mu0, |omega| = xi
        const Cx<R> omega{R(0) - (xi * R(s) * q) / mu0, R(0) - (xi * E) / mu0};
        Cx<R> pw{R(1), R(0)};
        for (int i = 0; i < n_lo; ++i) pw = pw * omega;
        Cx<R> acc{R(0), R(0)};
        for (int n = n_lo; n <= n_max; ++n) {
            const Cx<R> term = pw * J[n];
            acc += term;
            track(term);
            ++terms;
            if (n < n_max) pw = pw * omega;
        }
        tail2 = max(tail2, pw.norm2() * J[n_max] * J[n_max]);
        return acc;
    };

    if (grouping == Grouping::Symmetric) {
        for (int s : {+1, -1}) {
            const R sq = R(s) * q;
            const Cx<R> k{(R(2) * E * E) / mu0_sq, R(0) - (R(2) * E * sq) / mu0_sq};
            // i z_s = (-s q + iE)/mu0
            const Cx<R> iz{(R(0) - sq) / mu0, E / mu0};
            const Cx<R> expo = carrier * exp(R(0) - sq * x);
            track(expo);
            const Cx<R> j1term = (iz * (R(1) / (R(2) * xi))) * J[1];
            const Cx<R> series = branch_sum(s, 0);
            Cx<R> psi_s = expo + j1term - series;
            result += k * psi_s;
        }
    } else {
        // k_minus group carries the exponential; k_plus group is benign.
        {
            const Cx<R> k{(R(2) * E * E) / mu0_sq, (R(2) * E * q) / mu0_sq};  // k_minus
            const Cx<R> expo = carrier * exp(q * x);
            track(expo);
            const Cx<R> series = branch_sum(-1, 1);
            Cx<R> g = expo - Cx<R>{J[0], R(0)} - series;
            result += k * g;
        }
        {
            const Cx<R> k{(R(2) * E * E) / mu0_sq, R(0) - (R(2) * E * q) / mu0_sq};  // k_plus
            // rho = z_plus / (i xi) = (q - iE) / (mu0 xi), |rho| = 1/xi
            const Cx<R> rho{q / (mu0 * xi), (R(0) - E) / (mu0 * xi)};
            Cx<R> pw = rho * rho;
            Cx<R> acc{R(0), R(0)};
            for (int n = 2; n <= n_max; ++n) {
                const Cx<R> term = pw * J[n];
                acc += term;
                track(term);
                ++terms;
                pw = pw * rho;
            }
            result += k * acc;
        }
    }

    LiteralResult out;
    out.value = {to_double(result.re), to_double(result.im)};
    const double res_mag = std::max(std::abs(out.value), 1e-300);
    const double max_mag = std::sqrt(to_double(max_mag2));
    out.cancellation_ratio = std::max(1.0, max_mag / res_mag);
    out.est_error = max_mag * std::pow(10.0, 1.0 - digits10) +
                    2.0 * std::sqrt(to_double(tail2));
    out.terms_used = terms;
    return out;
}

ComplexAmplitude dispatch_literal(const StepParams& p, const SpacetimePoint& pt, int n_max,
                                  Grouping grouping) {
    const LightConeCoords lc = light_cone(p, pt);
    if (lc.region != Region::Interior)
        throw std::invalid_argument("literal evaluation requires an Interior point");
    if (n_max < lc.eta + 40)
        throw std::invalid_argument("literal evaluation requires n_max >= eta + 40");

    const double budget = cancellation_budget(p, pt);  // natural log scale
    LiteralResult r;
    if (budget <= 25.0)
        r = eval_literal<double>(p, pt, n_max, 15, grouping);
    else if (budget <= 230.0)
        r = eval_literal<f130>(p, pt, n_max, 130, grouping);
    else if (budget <= 600.0)
        r = eval_literal<f290>(p, pt, n_max, 290, grouping);
    else
        throw std::domain_error(
            "literal evaluation: cancellation budget exceeds extended-precision "
            "capacity (~600 in log magnitude); use psi_exact instead");

    ComplexAmplitude out;
    out.value = r.value;
    out.abs2 = std::norm(r.value);
    out.diag = {Method::LiteralSeries, r.terms_used, r.cancellation_ratio, r.est_error};
    return out;
}

}  // namespace

ComplexAmplitude psi_literal(const StepParams& p, const SpacetimePoint& pt, int n_max) {
    return dispatch_literal(p, pt, n_max, Grouping::Symmetric);
}

ComplexAmplitude psi_alt(const StepParams& p, const SpacetimePoint& pt, int n_max) {
    return dispatch_literal(p, pt, n_max, Grouping::Regrouped);
}

}  // namespace kgstep
