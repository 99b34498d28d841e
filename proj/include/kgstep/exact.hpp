#pragma once

#include <complex>

#include "kgstep/core.hpp"

namespace kgstep {

enum class Method {
    StableSeries,
    LiteralSeries,
    CutoffAsymptote,
    Stationary,
    LommelApprox,
    Quadrature,
};

const char* method_name(Method m);

struct EvalDiagnostics {
    Method method;
    int terms_used;
    double cancellation_ratio;  // largest intermediate magnitude / |result|
    double est_error;
};

struct ComplexAmplitude {
    std::complex<double> value;
    double abs2;
    EvalDiagnostics diag;
};

// Exact interior solution via the stable resummation
//   psi = sum_{+-} k_pm [ (i z_pm / 2 xi) J_1(eta)
//                         + sum_{n>=1} (-1)^n (i z_pm / xi)^n J_n(eta) ],
// whose terms are bounded by xi^-n.  Exterior/OnCone points return 0.
ComplexAmplitude psi_exact(const StepParams& p, const SpacetimePoint& pt,
                           double tol = 1e-12);

// Direct evaluation of the printed closed form
//   psi_pm = k_pm [ e^{(-+ q x - i E c t)} + (i z_pm / 2 xi) J_1(eta)
//                   - sum_{n>=0} (xi / i z_pm)^n J_n(eta) ],
// switching to an extended-precision accumulator when the cancellation
// budget q x + eta ln xi exceeds 25.  Interior points only.
ComplexAmplitude psi_literal(const StepParams& p, const SpacetimePoint& pt, int n_max);

// Same solution, regrouped so only the k_minus part carries the growing
// exponential:
//   psi = k_minus [ e^{(q x - i E c t)} - J_0(eta) - sum_{n>=1} (xi / i z_minus)^n J_n(eta) ]
//         + k_plus  [ sum_{n>=2} (z_plus / i xi)^n J_n(eta) ].
ComplexAmplitude psi_alt(const StepParams& p, const SpacetimePoint& pt, int n_max);

// Free-propagation limit: e^{ik(x - ct)} - 1 inside the cone, 0 outside.
ComplexAmplitude psi_free(double k, const SpacetimePoint& pt);

// Stationary evanescent solution k_plus e^{-qx} e^{-iEct}.
ComplexAmplitude phi_stationary(const StepParams& p, const SpacetimePoint& pt);

// Near-cone precursor asymptote -(2iE / mu0 xi) J_1(eta).  The sign follows
// from the series itself (sum of k_pm z_pm branches); see docs/NOTES.md.
ComplexAmplitude psi_cutoff_asym(const StepParams& p, const SpacetimePoint& pt);

// Low-energy Lommel form 2(E/mu0) [U_3(i eta/xi, eta) - U_1(i eta/xi, eta)] e^{-iEct}.
// Requires mu0/energy_k >= 10.
ComplexAmplitude psi_lommel(const StepParams& p, const SpacetimePoint& pt);

// Dispatcher: Exterior/OnCone -> 0; (ct-x)/ct < 1e-6 -> psi_cutoff_asym;
// otherwise psi_exact.
ComplexAmplitude psi_auto(const StepParams& p, const SpacetimePoint& pt,
                          double tol = 1e-12);

// Predicted log-magnitude of the destructive cancellation in psi_literal.
double cancellation_budget(const StepParams& p, const SpacetimePoint& pt);

}  // namespace kgstep
