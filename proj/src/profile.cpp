#include "vcw/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vcw/error.hpp"

namespace vcw {

namespace {

double stretched(double x, const ProfileParams& prof) {
    return std::pow(1.0 + prof.alpha * x, prof.delta0);
}

void check_positive(const Field& theta, double t) {
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (!(theta[i] > 0.0) || !std::isfinite(theta[i])) {
            std::ostringstream msg;
            msg << "profile temperature " << theta[i] << " at node " << i << ", t = " << t;
            throw Error(ErrorCode::PositivityLoss, msg.str());
        }
    }
}

void apply_closures(const PhysParams& p, Field& theta) {
    theta[0] = p.theta_minus;
    theta[theta.size() - 1] = theta[theta.size() - 2];
}

Field log_of(const Field& f) {
    Field out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::log(f[i]);
    return out;
}

Field average(const Field& a, const Field& b) {
    Field out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = 0.5 * (a[i] + b[i]);
    return out;
}

/// L2 norm over nodes 2..n-2; the outermost stencils are boundary closures.
double interior_l2(const Grid1D& grid, Field r) {
    const std::size_t n = grid.cells();
    r[0] = r[1] = r[n - 1] = r[n] = 0.0;
    return std::sqrt(l2sq(grid, r));
}

}  // namespace

double theta0_eval(double x, const PhysParams& p, const ProfileParams& prof) {
    return p.theta_plus - p.jump() * std::exp(1.0 - stretched(x, prof));
}

double theta0_dx(double x, const PhysParams& p, const ProfileParams& prof) {
    const double base = 1.0 + prof.alpha * x;
    return p.jump() * prof.alpha * prof.delta0 * std::pow(base, prof.delta0 - 1.0) *
           std::exp(1.0 - std::pow(base, prof.delta0));
}

double theta0_dxx(double x, const PhysParams& p, const ProfileParams& prof) {
    const double base = 1.0 + prof.alpha * x;
    const double d = prof.delta0;
    return p.jump() * prof.alpha * prof.alpha * d *
           ((d - 1.0) * std::pow(base, d - 2.0) - d * std::pow(base, 2.0 * d - 2.0)) *
           std::exp(1.0 - std::pow(base, d));
}

double theta0_dxxx(double x, const PhysParams& p, const ProfileParams& prof) {
    const double base = 1.0 + prof.alpha * x;
    const double d = prof.delta0;
    const double a = prof.alpha;
    const double z1 = a * d * std::pow(base, d - 1.0);
    const double z2 = a * a * d * (d - 1.0) * std::pow(base, d - 2.0);
    const double z3 = a * a * a * d * (d - 1.0) * (d - 2.0) * std::pow(base, d - 3.0);
    return p.jump() * (z3 - 3.0 * z1 * z2 + z1 * z1 * z1) * std::exp(1.0 - std::pow(base, d));
}

ProfileState profile_from_theta(const Grid1D& grid, const PhysParams& p, Field theta, double t) {
    require_aligned(grid, theta);
    check_positive(theta, t);

    ProfileState st;
    st.t = t;
    const Field w = log_of(theta);
    st.ln_x = diff_first(grid, w, DiffMode::central);
    st.ln_xx = diff_second(grid, w);
    st.ln_xxx = diff_first(grid, st.ln_xx, DiffMode::one_sided);

    const std::size_t m = grid.nodes();
    st.V = Field(m);
    st.U = Field(m);
    const double c = p.u_coeff();
    for (std::size_t i = 0; i < m; ++i) {
        st.V[i] = p.R / p.p_plus * theta[i];
        st.U[i] = c * st.ln_x[i] + p.u_b;
    }
    st.theta = std::move(theta);

    SourceTerms src = sources_FG(st, p, grid);
    st.F = std::move(src.F);
    st.G = std::move(src.G);
    st.f_discrepancy = src.f_discrepancy;
    st.layer_near_boundary = layer_near_boundary(grid, p, st.theta);
    return st;
}

ProfileState build_profile(const Grid1D& grid, const PhysParams& p, const ProfileParams& prof) {
    validate(prof);
    Field theta = sample(grid, [&](double x) { return theta0_eval(x, p, prof); });
    return profile_from_theta(grid, p, std::move(theta), 0.0);
}

SourceTerms sources_FG(const ProfileState& state, const PhysParams& p, const Grid1D& grid) {
    require_aligned(grid, state.theta);
    require_aligned(grid, state.ln_xx);
    const std::size_t m = grid.nodes();
    const double c = p.u_coeff();

    Field over_theta(m), over_v(m);
    for (std::size_t i = 0; i < m; ++i) {
        over_theta[i] = state.ln_xx[i] / state.theta[i];
        over_v[i] = state.ln_xx[i] / state.V[i];
    }
    const Field d_over_theta = diff_first(grid, over_theta, DiffMode::central);
    const Field d_over_v = diff_first(grid, over_v, DiffMode::central);

    // (ln Theta)_xt = s (ln Theta)_xx + a ((ln Theta)_xx / Theta)_x, so the
    // drift terms cancel inside the braces of the definitional form.
    const double closed_coeff = (p.kappa * p.a * (p.gamma - 1.0) - p.mu * p.p_plus * p.gamma) /
                                (p.R * p.gamma);

    SourceTerms out{Field(m), Field(m), 0.0};
    Field diff(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.F[i] = c * (p.a * d_over_theta[i] - p.mu * d_over_v[i]);
        diff[i] = out.F[i] - closed_coeff * d_over_theta[i];
        const double u_x = c * state.ln_xx[i];
        out.G[i] = -p.mu * u_x * u_x / state.V[i];
    }
    out.f_discrepancy = std::sqrt(l2sq(grid, diff));
    return out;
}

Field theta_rate(const Grid1D& grid, const PhysParams& p, const Field& theta) {
    const std::size_t n = grid.cells();
    const double dx = grid.dx();
    const double inv_dx2 = 1.0 / (dx * dx);
    Field w = log_of(theta);
    Field rate(grid);
    for (std::size_t i = 1; i < n; ++i) {
        const double drift = p.s * drift_slope(theta, i, dx);
        const double diffusion = p.a * (w[i + 1] - 2.0 * w[i] + w[i - 1]) * inv_dx2;
        rate[i] = drift + diffusion;
    }
    return rate;
}

double profile_dt(const Grid1D& grid, const PhysParams& p, double safety) {
    if (!(safety > 0.0 && safety <= 1.0)) {
        throw Error(ErrorCode::InvalidValue, "cfl safety must lie in (0, 1]");
    }
    const double dx = grid.dx();
    const double advective = dx / std::abs(p.s);
    const double diffusive = dx * dx / (2.0 * p.a / p.theta_min());
    return safety * std::min(advective, diffusive);
}

ProfileState advance_profile(const ProfileState& state, double dt, const PhysParams& p,
                             const Grid1D& grid) {
    require_aligned(grid, state.theta);
    if (!(dt > 0.0)) throw Error(ErrorCode::NonPositiveTime, "time step must be positive");
    const std::size_t m = grid.nodes();

    const Field k1 = theta_rate(grid, p, state.theta);
    Field half(m);
    for (std::size_t i = 0; i < m; ++i) half[i] = state.theta[i] + 0.5 * dt * k1[i];
    apply_closures(p, half);
    check_positive(half, state.t + 0.5 * dt);

    const Field k2 = theta_rate(grid, p, half);
    Field next(m);
    for (std::size_t i = 0; i < m; ++i) next[i] = state.theta[i] + dt * k2[i];
    apply_closures(p, next);

    return profile_from_theta(grid, p, std::move(next), state.t + dt);
}

bool layer_near_boundary(const Grid1D& grid, const PhysParams& p, const Field& theta) {
    const std::size_t n = grid.cells();
    const auto first = static_cast<std::size_t>(std::floor(0.9 * static_cast<double>(n)));
    double worst = 0.0;
    for (std::size_t i = first; i <= n; ++i) worst = std::max(worst, std::abs(theta[i] - p.theta_plus));
    return worst > 1e-3 * std::abs(p.jump());
}

ProfileResidual profile_residual(const ProfileState& prev, const ProfileState& next,
                                 const PhysParams& p, const Grid1D& grid) {
    if (prev.theta.size() != grid.nodes() || next.theta.size() != grid.nodes()) {
        throw Error(ErrorCode::StateMismatch, "profile states do not match the grid");
    }
    const double dt = next.t - prev.t;
    if (!(dt > 0.0)) throw Error(ErrorCode::StateMismatch, "next state must be later than prev");

    const std::size_t m = grid.nodes();
    const double c = p.u_coeff();

    const Field theta_m = average(prev.theta, next.theta);
    const Field v_m = average(prev.V, next.V);
    const Field u_m = average(prev.U, next.U);
    const Field ln_xx_m = average(prev.ln_xx, next.ln_xx);
    const Field f_m = average(prev.F, next.F);
    const Field g_m = average(prev.G, next.G);

    const Field theta_x = diff_first(grid, theta_m);
    const Field v_x = diff_first(grid, v_m);
    const Field u_x_drift = diff_first(grid, u_m);

    Field pressure(m), visc_flux(m), heat_flux(m), u_x(m);
    for (std::size_t i = 0; i < m; ++i) {
        pressure[i] = p.R * theta_m[i] / v_m[i];
        u_x[i] = c * ln_xx_m[i];
        visc_flux[i] = u_x[i] / v_m[i];
        heat_flux[i] = theta_x[i] / v_m[i];
    }
    const Field p_x = diff_first(grid, pressure);
    const Field visc = diff_first(grid, visc_flux);
    const Field heat = diff_first(grid, heat_flux);

    Field r_theta(m), r_mass(m), r_mom(m), r_energy(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double theta_t = (next.theta[i] - prev.theta[i]) / dt;
        r_theta[i] = theta_t - p.s * theta_x[i] - p.a * ln_xx_m[i];
        r_mass[i] = (next.V[i] - prev.V[i]) / dt - p.s * v_x[i] - u_x[i];
        r_mom[i] = (next.U[i] - prev.U[i]) / dt - p.s * u_x_drift[i] + p_x[i] -
                   p.mu * visc[i] - f_m[i];
        r_energy[i] = p.c_v * (theta_t - p.s * theta_x[i]) + pressure[i] * u_x[i] -
                      p.kappa * heat[i] - p.mu * u_x[i] * u_x[i] / v_m[i] - g_m[i];
    }
    return ProfileResidual{interior_l2(grid, r_mass), interior_l2(grid, r_mom),
                           interior_l2(grid, r_energy), interior_l2(grid, r_theta)};
}

ProfileState evolve_profile(ProfileState state, double t_end, const PhysParams& p,
                            const Grid1D& grid, double safety) {
    const double span = t_end - state.t;
    if (span <= 0.0) return state;
    const double dt_max = profile_dt(grid, p, safety);
    const auto steps = static_cast<std::size_t>(std::ceil(span / dt_max));
    const double dt = span / static_cast<double>(steps);
    const double t0 = state.t;
    for (std::size_t k = 1; k <= steps; ++k) {
        state = advance_profile(state, dt, p, grid);
        state.t = t0 + static_cast<double>(k) * dt;
    }
    state.t = t_end;
    return state;
}

}  // namespace vcw
