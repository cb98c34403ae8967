#include "vcw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

#include "vcw/error.hpp"

namespace vcw {

Check Check::at_most(std::string name, double measured, double threshold) {
    const bool ok = std::isfinite(measured) && measured <= threshold;
    return Check{std::move(name), measured, threshold, Sense::at_most, ok};
}

Check Check::at_least(std::string name, double measured, double threshold) {
    const bool ok = std::isfinite(measured) && measured >= threshold;
    return Check{std::move(name), measured, threshold, Sense::at_least, ok};
}

Check Check::holds(std::string name, bool ok) {
    return Check{std::move(name), ok ? 1.0 : 0.0, 1.0, Sense::at_least, ok};
}

double entropy_phi(double z) {
    if (!(z > 0.0)) {
        throw Error(ErrorCode::NonPositiveArgument, "entropy weight needs z > 0");
    }
    return z - std::log(z) - 1.0;
}

DecayRecord profile_decay_record(const ProfileState& profile, const Field& theta2_at_t,
                                 const Grid1D& grid) {
    require_aligned(grid, profile.theta);
    require_aligned(grid, theta2_at_t);

    const Field theta_x = diff_first(grid, profile.theta);
    Field gap(grid);
    for (std::size_t i = 0; i < grid.nodes(); ++i) gap[i] = profile.theta[i] - theta2_at_t[i];

    return DecayRecord{profile.t,
                       l2sq(grid, profile.ln_x),
                       l2sq(grid, profile.ln_xx),
                       l2sq(grid, profile.ln_xxx),
                       profile.ln_x[0] * profile.ln_x[0],
                       profile.ln_xx[0] * profile.ln_xx[0],
                       l2sq(grid, theta_x),
                       l2sq(grid, gap)};
}

DecayFit fit_power_law(std::span<const TimeValue> series, double t0, double t1) {
    if (!(t0 >= 1.0) || !(t1 > t0)) {
        throw Error(ErrorCode::InvalidValue, "fit window must satisfy 1 <= t0 < t1");
    }
    std::vector<double> xs, ys;
    for (const TimeValue& tv : series) {
        if (tv.t < t0 || tv.t > t1) continue;
        if (!(tv.value > 0.0) || !std::isfinite(tv.value)) {
            std::ostringstream msg;
            msg << "value " << tv.value << " at t = " << tv.t;
            throw Error(ErrorCode::NonPositiveValue, msg.str());
        }
        xs.push_back(std::log1p(tv.t));
        ys.push_back(std::log(tv.value));
    }
    if (xs.size() < 8) {
        throw Error(ErrorCode::InsufficientSamples,
                    "need 8 samples in the window, got " + std::to_string(xs.size()));
    }

    const double count = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxx += (xs[k] - mx) * (xs[k] - mx);
        sxy += (xs[k] - mx) * (ys[k] - my);
        syy += (ys[k] - my) * (ys[k] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    double ss_res = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double e = ys[k] - (intercept + slope * xs[k]);
        ss_res += e * e;
    }
    // A flat series has no variance to explain; an exact fit of it is perfect.
    const double scale = std::max(1.0, std::abs(my));
    double goodness = 1.0;
    if (syy > 1e-24 * scale * scale * count) goodness = 1.0 - ss_res / syy;
    goodness = std::clamp(goodness, 0.0, 1.0);

    return DecayFit{slope, std::exp(intercept), t0, t1, goodness, xs.size()};
}

EnergyRecord energy_and_dissipation(const Perturbation& pert, const FluidState& fluid,
                                    const ProfileState& profile, const PhysParams& p,
                                    const Grid1D& grid) {
    require_aligned(grid, pert.phi);
    require_aligned(grid, fluid.v);
    require_aligned(grid, profile.theta);
    const std::size_t m = grid.nodes();

    const Field phi_x = diff_first(grid, pert.phi);
    const Field psi_x = diff_first(grid, pert.psi);
    const Field zeta_x = diff_first(grid, pert.zeta);

    Field e(m), e_local(m), d(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double v = fluid.v[i];
        const double th = fluid.theta[i];
        const double V = profile.V[i];
        const double Th = profile.theta[i];
        if (!(v > 0.0 && th > 0.0 && V > 0.0 && Th > 0.0)) {
            std::ostringstream msg;
            msg << "energy integrand at node " << i << ", t = " << fluid.t;
            throw Error(ErrorCode::PositivityLoss, msg.str());
        }
        const double kinetic = 0.5 * pert.psi[i] * pert.psi[i];
        const double vol = entropy_phi(v / V);
        const double thermal = p.c_v * Th * entropy_phi(th / Th);
        e[i] = kinetic + p.R * Th * vol + thermal;
        e_local[i] = kinetic + p.R * th * vol + thermal;
        d[i] = p.mu * Th * psi_x[i] * psi_x[i] / (v * th) +
               p.kappa * Th * zeta_x[i] * zeta_x[i] / (v * th * th);
    }

    const double l2 = l2sq(grid, pert.phi) + l2sq(grid, pert.psi) + l2sq(grid, pert.zeta);
    const double h1 = l2sq(grid, phi_x) + l2sq(grid, psi_x) + l2sq(grid, zeta_x);
    return EnergyRecord{fluid.t, integrate(grid, e), integrate(grid, e_local), integrate(grid, d),
                        0.0, std::sqrt(l2 + h1)};
}

PoincareTerms poincare_terms(const Perturbation& pert, const ProfileState& profile,
                             const Grid1D& grid) {
    require_aligned(grid, pert.phi);
    require_aligned(grid, pert.zeta);
    const Field theta_x = diff_first(grid, profile.theta);
    Field weighted(grid);
    for (std::size_t i = 0; i < grid.nodes(); ++i) {
        weighted[i] = theta_x[i] * theta_x[i] *
                      (pert.phi[i] * pert.phi[i] + pert.zeta[i] * pert.zeta[i]);
    }
    const double den = l2sq(grid, diff_first(grid, pert.phi)) +
                       l2sq(grid, diff_first(grid, pert.zeta));
    return PoincareTerms{integrate(grid, weighted), den};
}

std::optional<double> poincare_ratio(const Perturbation& pert, const ProfileState& profile,
                                     const Grid1D& grid) {
    const PoincareTerms terms = poincare_terms(pert, profile, grid);
    if (!(terms.denominator > 0.0)) return std::nullopt;
    return terms.numerator / terms.denominator;
}

double oscillation(const Field& theta) {
    if (theta.size() == 0) return 0.0;
    const auto [lo, hi] = std::minmax_element(theta.begin(), theta.end());
    return *hi - *lo;
}

double sup_interpolation_ratio(const Field& f, const Grid1D& grid) {
    const double sup = sup_abs(f);
    if (sup == 0.0) return 0.0;
    const double denom = 2.0 * std::sqrt(l2sq(grid, f) * l2sq(grid, diff_first(grid, f)));
    if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
    return sup * sup / denom;
}

namespace {

KappaRow kappa_row(double kappa, const KappaStudy& study, const PhysParams& base,
                   const ProfileParams& prof, const Grid1D& grid) {
    const PhysParams p = with_kappa(base, kappa);
    ProfileParams local = prof;
    local.alpha = prof.coupling.alpha_for(kappa);

    ProfileState st = evolve_profile(build_profile(grid, p, local), study.horizon, p, grid,
                                     study.safety);

    const double front = -p.s * study.horizon;
    Field d_theta(grid), d_v(grid), d_u(grid);
    for (std::size_t i = 0; i < grid.nodes(); ++i) {
        const bool behind = grid.x(i) < front;
        d_theta[i] = st.theta[i] - (behind ? p.theta_minus : p.theta_plus);
        d_v[i] = st.V[i] - (behind ? p.v_minus : p.v_plus);
        d_u[i] = st.U[i] - p.u_b;
    }

    KappaRow row{kappa, local.alpha, p.a, l1(grid, d_theta), std::sqrt(l2sq(grid, d_theta)),
                 l1(grid, d_v), {}};
    for (double q : study.exponents) row.u_lp.push_back(integrate_norm(grid, d_u, norm::Lp{q}));
    return row;
}

}  // namespace

std::vector<KappaRow> kappa_limit_study(const KappaStudy& study, const PhysParams& base,
                                        const ProfileParams& prof, const Grid1D& grid) {
    validate(prof);
    if (-base.s * study.horizon > 0.9 * grid.length()) {
        throw Error(ErrorCode::LayerContainmentViolated,
                    "contact front -s*T exceeds 0.9 L in the kappa study");
    }
    for (double q : study.exponents) {
        if (!(q >= 1.0)) throw Error(ErrorCode::InvalidExponent, "Lp exponents must be >= 1");
    }

    std::vector<std::future<KappaRow>> jobs;
    jobs.reserve(study.kappas.size());
    for (double kappa : study.kappas) {
        jobs.push_back(std::async(std::launch::async, kappa_row, kappa, std::cref(study),
                                  std::cref(base), std::cref(prof), std::cref(grid)));
    }
    std::vector<KappaRow> rows;
    rows.reserve(jobs.size());
    for (auto& job : jobs) rows.push_back(job.get());
    return rows;
}

Theta0Report theta0_checks(const PhysParams& p, const ProfileParams& prof, const Grid1D& grid) {
    validate(prof);
    Theta0Report rep{};
    const double jump = p.jump();
    const double sign = jump > 0.0 ? 1.0 : (jump < 0.0 ? -1.0 : 0.0);

    rep.slope_l1 = half_line_integral(
        [&](double x) { return std::abs(theta0_dx(x, p, prof)); }, prof);
    rep.tail_l1 = half_line_integral(
        [&](double x) { return std::abs(theta0_eval(x, p, prof) - p.theta_plus); }, prof);

    rep.slope_l1_grid = 0.0;
    rep.min_signed_slope = std::numeric_limits<double>::infinity();
    rep.envelope_ratio = 0.0;
    const double c_env = std::abs(jump) * std::numbers::e;
    for (std::size_t i = 0; i < grid.nodes(); ++i) {
        const double x = grid.x(i);
        if (i > 0) {
            rep.slope_l1_grid += std::abs(theta0_eval(x, p, prof) - theta0_eval(grid.x(i - 1), p, prof));
        }
        const double slope = theta0_dx(x, p, prof);
        rep.min_signed_slope = std::min(rep.min_signed_slope, sign * slope);
        const double base = 1.0 + prof.alpha * x;
        const double envelope = c_env * prof.alpha * prof.delta0 *
                                std::pow(base, prof.delta0 - 1.0) *
                                std::exp(-std::pow(base, prof.delta0));
        if (envelope > 0.0) rep.envelope_ratio = std::max(rep.envelope_ratio, std::abs(slope) / envelope);
    }

    double lo_a = std::numeric_limits<double>::infinity(), hi_a = 0.0;
    double lo_w = lo_a, hi_w = 0.0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (double delta0 : {0.25, 0.5}) {
            ProfileParams q = prof;
            q.alpha = alpha;
            q.delta0 = delta0;
            auto slope_sq = [&](double x) {
                const double d = theta0_dx(x, p, q);
                return d * d;
            };
            Theta0SweepRow row{alpha, delta0, half_line_integral(slope_sq, q),
                               half_line_integral(
                                   [&](double x) { return slope_sq(x) * (1.0 + alpha * x); }, q),
                               0.0, 0.0};
            row.theta_x_sq_ratio = row.theta_x_sq / (alpha * delta0);
            row.weighted_ratio = row.weighted_sq / (alpha * delta0);
            lo_a = std::min(lo_a, row.theta_x_sq_ratio);
            hi_a = std::max(hi_a, row.theta_x_sq_ratio);
            lo_w = std::min(lo_w, row.weighted_ratio);
            hi_w = std::max(hi_w, row.weighted_ratio);
            rep.sweep.push_back(row);
        }
    }
    rep.theta_x_sq_span = lo_a > 0.0 ? hi_a / lo_a : (hi_a > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    rep.weighted_span = lo_w > 0.0 ? hi_w / lo_w : (hi_w > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);

    rep.checks.push_back(
        Check::at_most("theta0_slope_l1_error", std::abs(rep.slope_l1 - std::abs(jump)), 1e-8));
    if (jump != 0.0) {
        rep.checks.push_back(Check::holds("theta0_slope_positive", rep.min_signed_slope > 0.0));
    }
    rep.checks.push_back(Check::at_most("theta0_slope_envelope", rep.envelope_ratio, 1.0 + 1e-12));
    rep.checks.push_back(Check::holds("theta0_tail_l1_finite", std::isfinite(rep.tail_l1)));
    rep.checks.push_back(Check::at_most("theta0_sq_sweep_span", rep.theta_x_sq_span, 10.0));
    rep.checks.push_back(Check::at_most("theta0_weighted_sweep_span", rep.weighted_span, 10.0));
    return rep;
}

}  // namespace vcw
