#pragma once

#include <utility>
#include <vector>

#include "kgstep/core.hpp"
#include "kgstep/exact.hpp"

namespace kgstep {

enum class ScanAxis { OverX, OverT };

// A 1-D scan of the field over x (fixed t) or over t (fixed x).
struct FieldScan {
    ScanAxis axis;
    double fixed_value;  // t [fs] for OverX, x [nm] for OverT
    std::vector<std::pair<double, ComplexAmplitude>> samples;  // (coord, psi)
    StepParams params;
};

FieldScan make_scan_over_x(const StepParams& p, double t, double x_lo, double x_hi,
                           int n, double tol = 1e-12);
FieldScan make_scan_over_t(const StepParams& p, double x, double t_lo, double t_hi,
                           int n, double tol = 1e-12);

struct PeakReport {
    double t_peak;      // fs, parabolic sub-sample refinement
    double peak_value;  // |psi|^2 at the refined peak
    double x;           // nm (the scan's fixed position)
};

struct OscillationReport {
    std::vector<std::pair<double, double>> extrema;  // (coord, |psi|^2 or Re psi)
    std::vector<double> zeros;                       // zero-crossing coordinates
    std::vector<double> zero_spacings;
    double mean_spacing;
};

// Global maximum of |psi|^2 over a time scan with 3-point parabolic
// refinement; earliest-t tie-break.  Throws if the scan has no interior
// local maximum.
PeakReport detect_peak(const FieldScan& scan);

// Zeros (sign change + linear interpolation) and extrema of the de-phased
// real part Re(psi * e^{+iEct}) over an x scan near the cone.  The scan
// window must lie within [0.7*ct, ct).  Throws if fewer than 3 zeros.
OscillationReport precursor_zeros(const FieldScan& scan);

// Zeros of J_1(eta(x)) mapped to positions through eta = mu0 sqrt(c^2t^2 - x^2),
// restricted to [x_lo, x_hi].  Roots of J_1 are located by bisection.
std::vector<double> j1_zeros_mapped(const StepParams& p, double t, double x_lo,
                                    double x_hi);

// Smallest x at which |psi|^2 stops tracking |phi|^2: the relative deviation
// exceeds 50% and stays above it for the rest of the scan.  Throws if the
// scan never deviates persistently (no crossover in range).
double crossover_depth(const FieldScan& scan, const StepParams& p);

// Diffraction-in-time detector over a time scan at fixed x: front arrival at
// t0 = x/c, monotone rise to a first maximum, then >= 3 damped oscillations
// straddling |phi|^2.  Throws std::runtime_error when the pattern is absent.
OscillationReport diffraction_pattern(const FieldScan& scan);
bool has_diffraction_pattern(const FieldScan& scan);

// Max |psi|^2 over grid points beyond the cone (x > ct); exactly 0 for the
// analytic evaluator by construction.
double causality_scan(const StepParams& p, double t, const std::vector<double>& x_grid);

}  // namespace kgstep
