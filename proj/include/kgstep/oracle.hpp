#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "kgstep/core.hpp"
#include "kgstep/exact.hpp"

namespace kgstep {

// ---------------------------------------------------------------------------
// Inverse-transform quadrature oracle.
//
// The field is recovered as (1/2*pi*i) * Integral F(u) du with
//   F(u) = (2E/mu0) (1 - u^2) / [u^2 (u^2 - 2Eu/mu0 + 1)]
//          * exp{ i mu0 [u (x - ct) - (x + ct)/u] / 2 },
// integrated along a path equivalent to the horizontal line Im u = gamma.
// For Exterior points the line itself converges and is used directly.  For
// Interior points the line integrand grows like e^{gamma mu0 (ct-x)/2} at
// large |Re u| and cannot be truncated, so the path is deformed (Cauchy-
// equivalently: every singularity stays below it) onto the real axis with a
// semicircular arc of radius arc_rho over the unit-circle poles and 45-degree
// descending tails into the lower half-plane, where the integrand decays
// exponentially.  See docs/NOTES.md.
// ---------------------------------------------------------------------------

enum class QuadRule { Adaptive, FixedPanel };

struct QuadratureSpec {
    double gamma = 0.0;    // line height; 0 -> 2*max(q/mu0, 1)
    double u_max = 0.0;    // |Re u| extent of the finite part; 0 -> auto
    int n_nodes = 0;       // panels per segment for FixedPanel; 0 -> auto
    QuadRule rule = QuadRule::Adaptive;
    double arc_rho = 0.0;  // Interior arc radius; 0 -> 1 + 0.5*min(xi-1, 2)
};

ComplexAmplitude bromwich_quadrature(const StepParams& p, const SpacetimePoint& pt,
                                     const QuadratureSpec& spec = {});

// ---------------------------------------------------------------------------
// Finite-difference time-domain oracle for
//   psi_xx = (1/c^2) psi_tt + V(x) psi,   V = mu0^2 for x >= 0, else 0,
// with the shutter initial data psi(x,0) = e^{ikx} - e^{-ikx} (x <= 0).
// Second-order central differences; the potential term is applied as the
// time average (psi^{n+1} + psi^{n-1})/2, which keeps the scheme second
// order (and exactly energy-conserving) up to and including courant = 1.
// The interface node x = 0 carries the averaged coefficient mu0^2/2.
// ---------------------------------------------------------------------------

struct FdtdSpec {
    double dx;      // nm
    double dt;      // fs
    double x_min;   // nm (negative)
    double x_max;   // nm
    double t_end;   // fs
    double courant; // c*dt/dx, must be <= 1
};

FdtdSpec make_fdtd_spec(double dx, double courant, double x_min, double x_max,
                        double t_end);

struct FieldState {
    Eigen::ArrayXcd grid;       // psi at `time`
    Eigen::ArrayXcd grid_prev;  // psi at time - dt
    double time;                // fs
};

// Returns the state holding (psi^1, psi^0) at time = dt; psi^1 is seeded by
// a second-order Taylor start from the pre-release solution's time
// derivative d/dt psi(x,0) = -ikc e^{ikx} + ikc e^{-ikx} for x < 0.
FieldState fdtd_initial_state(const StepParams& p, const FdtdSpec& spec);

// One leapfrog step.  Throws std::runtime_error if |psi| exceeds 1e6.
FieldState fdtd_step(const FieldState& state, const StepParams& p, const FdtdSpec& spec);

// Discrete energy functional conserved exactly (up to roundoff) by the scheme.
double fdtd_energy(const FieldState& state, const StepParams& p, const FdtdSpec& spec);

// Interpolated probe value; order 1 (linear) or 3 (4-point cubic).
std::complex<double> fdtd_probe(const FieldState& state, const FdtdSpec& spec,
                                double x_probe, int order = 1);

struct ProbeSeries {
    double x_probe;
    std::vector<double> times;
    std::vector<std::complex<double>> values;
};

struct FdtdRunResult {
    std::vector<ProbeSeries> probes;
    double energy_drift;        // max relative drift of the discrete energy
    double causality_leakage;   // max |psi| beyond x > ct + 5 dx, relative
};

// Runs the full integration, sampling the probes every `stride` steps.
FdtdRunResult fdtd_run(const StepParams& p, const FdtdSpec& spec,
                       const std::vector<double>& probe_positions, int stride,
                       int interp_order = 1);

}  // namespace kgstep
