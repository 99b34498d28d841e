#include <cmath>
#include <stdexcept>

#include "kgstep/oracle.hpp"

namespace kgstep {

namespace {

struct GridGeom {
    int nx;
    double x0;
    double dx;
    double x_of(int i) const { return x0 + i * dx; }
};

GridGeom geometry(const FdtdSpec& spec) {
    if (!(spec.dx > 0.0) || !(spec.dt > 0.0))
        throw std::invalid_argument("fdtd: dx and dt must be positive");
    if (!(spec.x_min < 0.0 && spec.x_max > 0.0))
        throw std::invalid_argument("fdtd: domain must straddle the shutter at x = 0");
    const double cou = kSpeedOfLight * spec.dt / spec.dx;
    if (cou > 1.0 + 1e-12)
        throw std::invalid_argument("fdtd: courant number exceeds 1 (unstable)");
    GridGeom g;
    g.nx = static_cast<int>(std::llround((spec.x_max - spec.x_min) / spec.dx)) + 1;
    g.x0 = spec.x_min;
    g.dx = spec.dx;
    return g;
}

Eigen::ArrayXd potential(const StepParams& p, const GridGeom& g) {
    Eigen::ArrayXd V = Eigen::ArrayXd::Zero(g.nx);
    const double mu2 = p.mu0 * p.mu0;
    for (int i = 0; i < g.nx; ++i) {
        const double x = g.x_of(i);
        if (std::abs(x) < 0.5 * g.dx)
            V[i] = 0.5 * mu2;  // interface node: average of the two sides
        else if (x > 0.0)
            V[i] = mu2;
    }
    return V;
}

void step_inplace(Eigen::ArrayXcd& cur, Eigen::ArrayXcd& prev, const Eigen::ArrayXd& a,
                  double c2dt2_over_dx2) {
    const int n = static_cast<int>(cur.size());
    // (1 + a) psi^{n+1} = 2 psi^n + (c dt)^2 D2 psi^n - (1 + a) psi^{n-1}
    Eigen::ArrayXcd next = Eigen::ArrayXcd::Zero(n);
    next.segment(1, n - 2) =
        (2.0 * cur.segment(1, n - 2) +
         c2dt2_over_dx2 *
             (cur.segment(2, n - 2) - 2.0 * cur.segment(1, n - 2) + cur.segment(0, n - 2)) -
         (1.0 + a.segment(1, n - 2)) * prev.segment(1, n - 2)) /
        (1.0 + a.segment(1, n - 2));
    prev = std::move(cur);
    cur = std::move(next);
}

}  // namespace

FdtdSpec make_fdtd_spec(double dx, double courant, double x_min, double x_max,
                        double t_end) {
    if (!(courant > 0.0 && courant <= 1.0))
        throw std::invalid_argument("make_fdtd_spec: courant must be in (0, 1]");
    FdtdSpec s;
    s.dx = dx;
    s.dt = courant * dx / kSpeedOfLight;
    s.x_min = x_min;
    s.x_max = x_max;
    s.t_end = t_end;
    s.courant = courant;
    return s;
}

FieldState fdtd_initial_state(const StepParams& p, const FdtdSpec& spec) {
    const GridGeom g = geometry(spec);
    derive_params(p);  // parameter validation
    const double k = p.energy_k;
    const double c = kSpeedOfLight;
    const std::complex<double> i(0.0, 1.0);

    Eigen::ArrayXcd psi0 = Eigen::ArrayXcd::Zero(g.nx);
    Eigen::ArrayXcd dpsi0 = Eigen::ArrayXcd::Zero(g.nx);
    for (int j = 0; j < g.nx; ++j) {
        const double x = g.x_of(j);
        if (x <= 0.0) psi0[j] = std::exp(i * (k * x)) - std::exp(-i * (k * x));
        // d/dt of the pre-release solution e^{ik(x-ct)} - e^{-ik(x+ct)}:
        if (x < 0.0) dpsi0[j] = -i * (k * c) * std::exp(i * (k * x)) + i * (k * c) * std::exp(-i * (k * x));
    }

    const Eigen::ArrayXd V = potential(p, g);
    const double dt = spec.dt;
    Eigen::ArrayXcd psi1 = psi0;
    for (int j = 1; j < g.nx - 1; ++j) {
        const std::complex<double> lap =
            (psi0[j + 1] - 2.0 * psi0[j] + psi0[j - 1]) / (g.dx * g.dx);
        psi1[j] = psi0[j] + dt * dpsi0[j] + 0.5 * dt * dt * c * c * (lap - V[j] * psi0[j]);
    }
    psi1[0] = 0.0;
    psi1[g.nx - 1] = 0.0;

    FieldState st;
    st.grid = std::move(psi1);
    st.grid_prev = std::move(psi0);
    st.time = dt;
    return st;
}

FieldState fdtd_step(const FieldState& state, const StepParams& p, const FdtdSpec& spec) {
    const GridGeom g = geometry(spec);
    if (state.grid.size() != g.nx || state.grid_prev.size() != g.nx)
        throw std::invalid_argument("fdtd_step: state size does not match spec");
    const double c2dt2 = kSpeedOfLight * kSpeedOfLight * spec.dt * spec.dt;
    const Eigen::ArrayXd a = 0.5 * c2dt2 * potential(p, g);

    FieldState next;
    next.grid = state.grid;
    next.grid_prev = state.grid_prev;
    step_inplace(next.grid, next.grid_prev, a, c2dt2 / (g.dx * g.dx));
    next.time = state.time + spec.dt;
    const double peak = std::sqrt(next.grid.abs2().maxCoeff());
    if (peak > 1e6)
        throw std::runtime_error("fdtd_step: instability detected (|psi| > 1e6 at t = " +
                                 std::to_string(next.time) + " fs)");
    return next;
}

double fdtd_energy(const FieldState& state, const StepParams& p, const FdtdSpec& spec) {
    const GridGeom g = geometry(spec);
    const Eigen::ArrayXd V = potential(p, g);
    const double s = kSpeedOfLight * spec.dt;
    const Eigen::ArrayXcd& u1 = state.grid;       // psi^{n+1}
    const Eigen::ArrayXcd& u0 = state.grid_prev;  // psi^n
    const int n = g.nx;

    double e = 0.0;
    for (int j = 0; j < n; ++j) e += std::norm(u1[j] - u0[j]) / (s * s);
    for (int j = 0; j < n - 1; ++j) {
        const std::complex<double> d1 = (u1[j + 1] - u1[j]) / g.dx;
        const std::complex<double> d0 = (u0[j + 1] - u0[j]) / g.dx;
        e += (d1 * std::conj(d0)).real();
    }
    for (int j = 0; j < n; ++j) e += 0.5 * V[j] * (std::norm(u1[j]) + std::norm(u0[j]));
    return e * g.dx;
}

std::complex<double> fdtd_probe(const FieldState& state, const FdtdSpec& spec,
                                double x_probe, int order) {
    const GridGeom g = geometry(spec);
    const double reach = kSpeedOfLight * spec.t_end;
    if (x_probe - spec.x_min <= reach || spec.x_max - x_probe <= reach)
        throw std::invalid_argument(
            "fdtd_probe: probe inside the boundary-influenced region for this t_end");
    const double z = (x_probe - g.x0) / g.dx;
    const int i0 = static_cast<int>(std::floor(z));
    const double f = z - i0;
    const Eigen::ArrayXcd& u = state.grid;
    if (f < 1e-12) return u[i0];
    if (order == 1) return (1.0 - f) * u[i0] + f * u[i0 + 1];
    if (order == 3) {
        // 4-point Lagrange on i0-1 .. i0+2
        return u[i0 - 1] * (-f * (f - 1.0) * (f - 2.0) / 6.0) +
               u[i0] * ((f * f - 1.0) * (f - 2.0) / 2.0) +
               u[i0 + 1] * (-f * (f + 1.0) * (f - 2.0) / 2.0) +
               u[i0 + 2] * (f * (f * f - 1.0) / 6.0);
    }
    throw std::invalid_argument("fdtd_probe: interpolation order must be 1 or 3");
}

FdtdRunResult fdtd_run(const StepParams& p, const FdtdSpec& spec,
                       const std::vector<double>& probe_positions, int stride,
                       int interp_order) {
    if (stride < 1) throw std::invalid_argument("fdtd_run: stride must be >= 1");
    const GridGeom g = geometry(spec);
    const double c2dt2 = kSpeedOfLight * kSpeedOfLight * spec.dt * spec.dt;
    const Eigen::ArrayXd a = 0.5 * c2dt2 * potential(p, g);
    const double inv_dx2 = c2dt2 / (g.dx * g.dx);

    FieldState st = fdtd_initial_state(p, spec);
    FdtdRunResult out;
    for (double xp : probe_positions) {
        fdtd_probe(st, spec, xp, interp_order);  // validates reliable region
        out.probes.push_back({xp, {}, {}});
    }
    out.energy_drift = 0.0;
    out.causality_leakage = 0.0;

    const int n_steps = static_cast<int>(std::llround(spec.t_end / spec.dt));
    double e0 = 0.0;  // baseline after the first true leapfrog step

    for (int n = 1; n + 1 <= n_steps; ++n) {
        step_inplace(st.grid, st.grid_prev, a, inv_dx2);
        st.time += spec.dt;
        if (n == 1) e0 = fdtd_energy(st, p, spec);
        const bool sample = ((n + 1) % stride == 0) || (n + 1 == n_steps);
        if (sample) {
            for (size_t k = 0; k < out.probes.size(); ++k) {
                out.probes[k].times.push_back(st.time);
                out.probes[k].values.push_back(
                    fdtd_probe(st, spec, out.probes[k].x_probe, interp_order));
            }
            const double peak = std::sqrt(st.grid.abs2().maxCoeff());
            if (peak > 1e6)
                throw std::runtime_error("fdtd_run: instability detected at t = " +
                                         std::to_string(st.time));
            // Causality leakage: field beyond x > ct + 5 dx, relative to peak.
            const double front = kSpeedOfLight * st.time + 5.0 * g.dx;
            double leak = 0.0;
            for (int j = g.nx - 1; j >= 0; --j) {
                if (g.x_of(j) <= front) break;
                leak = std::max(leak, std::abs(st.grid[j]));
            }
            if (peak > 0.0) out.causality_leakage = std::max(out.causality_leakage, leak / peak);
            const double e = fdtd_energy(st, p, spec);
            out.energy_drift = std::max(out.energy_drift, std::abs(e - e0) / std::abs(e0));
        }
    }
    return out;
}

}  // namespace kgstep
