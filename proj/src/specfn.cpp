#include "kgstep/specfn.hpp"

#include <cmath>
#include <stdexcept>

namespace kgstep {

namespace {

// Direct power series, accurate to machine precision for small arguments
// where the downward recurrence ratios 2n/eta would be needlessly extreme.
double j_power_series(int n, double eta) {
    const double h = 0.5 * eta;
    double term = 1.0;
    for (int m = 1; m <= n; ++m) term *= h / m;  // (eta/2)^n / n!
    double acc = term;
    const double h2 = h * h;
    for (int m = 1; m <= 40; ++m) {
        term *= -h2 / (m * (n + m));
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc)) break;
    }
    return acc;
}

}  // namespace

BesselArray bessel_j_array(int n_max, double eta) {
    if (n_max < 0) throw std::invalid_argument("bessel_j_array: n_max must be >= 0");
    if (!std::isfinite(eta) || eta < 0.0)
        throw std::invalid_argument("bessel_j_array: eta must be finite and >= 0");

    BesselArray out;
    out.order_max = n_max;
    out.arg = eta;
    out.values = Eigen::ArrayXd::Zero(n_max + 1);

    if (eta == 0.0) {
        out.values[0] = 1.0;
        out.est_error = 0.0;
        return out;
    }
    if (eta < 0.5) {
        for (int n = 0; n <= n_max; ++n) out.values[n] = j_power_series(n, eta);
        out.est_error = 1e-16;
        return out;
    }

    // Start the downward recurrence far enough above both n_max and the
    // turning point n ~ eta that the minimal-solution contamination has
    // decayed below double precision.
    int n_start = n_max + static_cast<int>(std::ceil(10.0 + 1.5 * std::sqrt(std::max<double>(n_max, eta))));
    const int above_turn =
        static_cast<int>(std::ceil(eta)) + static_cast<int>(std::ceil(10.0 + 1.5 * std::sqrt(eta)));
    if (n_start < above_turn) n_start = above_turn;
    // Extend until the accumulated decay of the minimal solution (recurrence
    // ratio >= 2n/eta once past the turning point, floored near it) clears
    // double precision with margin.  Matters for small eta, where the fixed
    // sqrt offsets alone leave ~1e-12 contamination.
    {
        double gain = 0.0;
        const int base = std::max(n_max, static_cast<int>(std::ceil(eta)));
        for (int n = base + 1; n <= n_start; ++n)
            gain += std::log10(std::max(2.0 * n / eta, 1.02));
        while (gain < 21.0) {
            ++n_start;
            gain += std::log10(std::max(2.0 * n_start / eta, 1.02));
        }
    }

    double fp = 0.0;  // f_{n+1}
    double fc = 1.0;  // f_n (arbitrary seed; normalized away below)
    double norm = 0.0;
    for (int n = n_start; n >= 0; --n) {
        if (n <= n_max) out.values[n] = fc;
        norm += (n == 0) ? fc : ((n % 2 == 0) ? 2.0 * fc : 0.0);
        if (n > 0) {
            const double fm = (2.0 * n / eta) * fc - fp;
            fp = fc;
            fc = fm;
            if (std::abs(fc) > 1e250) {
                fc *= 1e-250;
                fp *= 1e-250;
                norm *= 1e-250;
                out.values *= 1e-250;
            }
        }
    }
    out.values /= norm;
    out.est_error = std::max(1e-15, 1e-15 * std::sqrt(eta));
    return out;
}

std::complex<double> lommel_u(int n, std::complex<double> w, double z, double* est_error) {
    if (n != 1 && n != 3) throw std::invalid_argument("lommel_u: order must be 1 or 3");
    if (!(z > 0.0) || !std::isfinite(z)) throw std::invalid_argument("lommel_u: z must be positive");
    const std::complex<double> r = w / z;
    if (std::abs(r) >= 1.0)
        throw std::domain_error("lommel_u: divergent regime (|w/z| >= 1)");

    const int k_top = static_cast<int>(std::ceil(z)) + 40 +
                      static_cast<int>(std::ceil(8.0 * std::cbrt(std::max(z, 1.0))));
    const int k_max = std::max(k_top, n + 10);
    const BesselArray J = bessel_j_array(k_max, z);

    std::complex<double> rp = 1.0;
    for (int i = 0; i < n; ++i) rp *= r;
    const std::complex<double> r2 = r * r;

    std::complex<double> acc = 0.0;
    double sign = 1.0;
    double last_term = 0.0;
    double max_mag = 0.0;
    for (int k = n; k <= k_max; k += 2) {
        const std::complex<double> term = sign * rp * J.values[k];
        acc += term;
        last_term = std::abs(term);
        max_mag = std::max(max_mag, std::abs(acc));
        // |J| <= 1, so |rp| bounds the next term until the Bessel turnover.
        if (std::abs(rp) < 1e-14 * std::abs(acc) && k > z) break;
        rp *= r2;
        sign = -sign;
    }
    if (est_error) *est_error = 10.0 * last_term + 1e-15 * max_mag + J.est_error;
    return acc;
}

double bessel_small_arg(int n, double eta) {
    if (n < 0) throw std::invalid_argument("bessel_small_arg: order must be >= 0");
    if (n == 0) return 1.0;
    double v = 1.0;
    for (int m = 1; m <= n; ++m) v *= 0.5 * eta / m;
    return v;
}

}  // namespace kgstep
