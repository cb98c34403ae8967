#include "vcw/ns_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vcw/error.hpp"

namespace vcw {

namespace {

void check_positive(const FluidState& s) {
    for (std::size_t i = 0; i < s.v.size(); ++i) {
        const bool bad_v = !(s.v[i] > 0.0) || !std::isfinite(s.v[i]);
        const bool bad_theta = !(s.theta[i] > 0.0) || !std::isfinite(s.theta[i]);
        if (bad_v || bad_theta || !std::isfinite(s.u[i])) {
            std::ostringstream msg;
            msg << "node " << i << " at t = " << s.t << ": v = " << s.v[i]
                << ", u = " << s.u[i] << ", theta = " << s.theta[i];
            throw Error(ErrorCode::PositivityLoss, msg.str());
        }
    }
}

void apply_boundaries(const PhysParams& p, FluidState& s) {
    const std::size_t n = s.v.size() - 1;
    s.v[0] = p.v_minus;
    s.u[0] = p.u_b;
    s.theta[0] = p.theta_minus;
    s.v[n] = s.v[n - 1];
    s.u[n] = s.u[n - 1];
    s.theta[n] = s.theta[n - 1];
}

void require_state(const Grid1D& grid, const FluidState& s) {
    require_aligned(grid, s.v);
    require_aligned(grid, s.u);
    require_aligned(grid, s.theta);
}

FluidState axpy(const FluidState& base, double h, const Tendencies& k) {
    FluidState out = base;
    for (std::size_t i = 0; i < base.v.size(); ++i) {
        out.v[i] += h * k.v_t[i];
        out.u[i] += h * k.u_t[i];
        out.theta[i] += h * k.theta_t[i];
    }
    out.t = base.t + h;
    return out;
}

}  // namespace

double PerturbSpec::bump(double x) const {
    if (x < center) return 0.0;
    const double r = (x - center) / width;
    return r * std::exp(1.0 - r);
}

void validate(const PerturbSpec& spec) {
    if (!(spec.width > 0.0)) throw Error(ErrorCode::InvalidPerturbation, "width must be positive");
    if (!(spec.center >= 0.0)) {
        throw Error(ErrorCode::InvalidPerturbation, "center must be non-negative");
    }
}

FluidState initialize_state(const Grid1D& grid, const ProfileState& profile0,
                            const PerturbSpec& spec, const PhysParams& p) {
    validate(spec);
    require_aligned(grid, profile0.theta);
    const double mismatch = p.u_b - profile0.U[0];

    FluidState s{profile0.t, Field(grid), Field(grid), Field(grid)};
    for (std::size_t i = 0; i < grid.nodes(); ++i) {
        const double x = grid.x(i);
        const double b = spec.bump(x);
        s.v[i] = profile0.V[i] + spec.amp_phi * b;
        s.u[i] = profile0.U[i] + spec.amp_psi * b + mismatch * std::exp(-x / spec.width);
        s.theta[i] = profile0.theta[i] + spec.amp_zeta * b;
    }
    check_positive(s);
    return s;
}

Tendencies compute_rhs(const FluidState& state, const PhysParams& p, const Grid1D& grid) {
    require_state(grid, state);
    check_positive(state);

    const std::size_t n = grid.cells();
    const double dx = grid.dx();
    const double heat_factor = (p.gamma - 1.0) / p.R;
    const Field& v = state.v;
    const Field& u = state.u;
    const Field& th = state.theta;

    Tendencies k{Field(grid), Field(grid), Field(grid)};

    // Interface fluxes u_x / v and theta_x / v at i + 1/2.
    std::vector<double> visc(n), cond(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v_face = 0.5 * (v[i] + v[i + 1]);
        visc[i] = (u[i + 1] - u[i]) / dx / v_face;
        cond[i] = (th[i + 1] - th[i]) / dx / v_face;
    }

    for (std::size_t i = 1; i < n; ++i) {
        const double u_x = (u[i + 1] - u[i - 1]) / (2.0 * dx);
        const double pressure = p.R * th[i] / v[i];
        const double p_x = p.R * (th[i + 1] / v[i + 1] - th[i - 1] / v[i - 1]) / (2.0 * dx);

        k.v_t[i] = p.s * drift_slope(v, i, dx) + u_x;
        k.u_t[i] = p.s * drift_slope(u, i, dx) - p_x + p.mu * (visc[i] - visc[i - 1]) / dx;
        k.theta_t[i] = p.s * drift_slope(th, i, dx) +
                       heat_factor * (-pressure * u_x + p.kappa * (cond[i] - cond[i - 1]) / dx +
                                      p.mu * u_x * u_x / v[i]);
    }
    return k;
}

double cfl_dt(const FluidState& state, const PhysParams& p, const Grid1D& grid, double safety) {
    if (!(safety > 0.0 && safety <= 1.0)) {
        throw Error(ErrorCode::InvalidValue, "cfl safety must lie in (0, 1]");
    }
    require_state(grid, state);
    double speed = 0.0;
    double nu = p.a / p.theta_min();
    for (std::size_t i = 0; i < grid.nodes(); ++i) {
        const double v = state.v[i];
        const double sound = std::sqrt(p.gamma * p.R * state.theta[i]) / v;
        speed = std::max(speed, std::abs(p.s) + std::abs(state.u[i] - p.u_b) + sound);
        nu = std::max({nu, p.mu / v, p.kappa * (p.gamma - 1.0) / (p.R * v)});
    }
    const double dx = grid.dx();
    return safety * std::min(dx / speed, dx * dx / (2.0 * nu));
}

FluidState advance(const FluidState& state, double dt, const PhysParams& p, const Grid1D& grid) {
    if (!(dt > 0.0)) throw Error(ErrorCode::NonPositiveTime, "time step must be positive");

    FluidState half = axpy(state, 0.5 * dt, compute_rhs(state, p, grid));
    apply_boundaries(p, half);
    check_positive(half);

    FluidState next = axpy(state, dt, compute_rhs(half, p, grid));
    apply_boundaries(p, next);
    check_positive(next);
    return next;
}

Perturbation extract_perturbation(const FluidState& state, const ProfileState& profile) {
    const std::size_t m = profile.theta.size();
    if (state.v.size() != m || state.u.size() != m || state.theta.size() != m) {
        throw Error(ErrorCode::StateMismatch, "fluid and profile sizes differ");
    }
    if (std::abs(state.t - profile.t) > 1e-9 * std::max(1.0, std::abs(state.t))) {
        std::ostringstream msg;
        msg << "fluid at t = " << state.t << ", profile at t = " << profile.t;
        throw Error(ErrorCode::StateMismatch, msg.str());
    }
    Perturbation d{Field(m), Field(m), Field(m)};
    for (std::size_t i = 0; i < m; ++i) {
        d.phi[i] = state.v[i] - profile.V[i];
        d.psi[i] = state.u[i] - profile.U[i];
        d.zeta[i] = state.theta[i] - profile.theta[i];
    }
    return d;
}

}  // namespace vcw
