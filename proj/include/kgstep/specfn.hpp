#pragma once

#include <complex>

#include <Eigen/Core>

namespace kgstep {

// Array of integer-order Bessel functions J_0(eta)..J_n_max(eta), computed
// by Miller's downward recurrence and normalized with J0 + 2*sum J_{2m} = 1.
struct BesselArray {
    int order_max;
    double arg;
    Eigen::ArrayXd values;  // values[n] = J_n(arg)
    double est_error;       // uniform absolute error bound
};

BesselArray bessel_j_array(int n_max, double eta);

// Two-variable Lommel function U_n(w, z) = sum_m (-1)^m (w/z)^(n+2m) J_{n+2m}(z),
// n in {1, 3}.  Requires |w/z| < 1 (throws std::domain_error otherwise).
std::complex<double> lommel_u(int n, std::complex<double> w, double z,
                              double* est_error = nullptr);

// Leading small-argument behavior J_n(eta) ~ 2^-n eta^n / n!.
double bessel_small_arg(int n, double eta);

}  // namespace kgstep
