#pragma once

#include "vcw/grid.hpp"
#include "vcw/params.hpp"

namespace vcw {

/// Closed-form initial temperature and its first three x-derivatives.
double theta0_eval(double x, const PhysParams& p, const ProfileParams& prof);
double theta0_dx(double x, const PhysParams& p, const ProfileParams& prof);
double theta0_dxx(double x, const PhysParams& p, const ProfileParams& prof);
double theta0_dxxx(double x, const PhysParams& p, const ProfileParams& prof);

/// The viscous contact wave (Theta, V, U) at one instant, together with the
/// cached derivatives of ln Theta and the source terms F, G it induces in the
/// Navier-Stokes rows.
struct ProfileState {
    double t = 0.0;
    Field theta;
    Field V;
    Field U;
    Field ln_x;    ///< central first difference of ln Theta
    Field ln_xx;   ///< diff_second of ln Theta
    Field ln_xxx;  ///< one-sided-end first difference of ln_xx
    Field F;       ///< momentum source (substituted form)
    Field G;       ///< energy source, -mu U_x^2 / V
    double f_discrepancy = 0.0;
    bool layer_near_boundary = false;
};

struct SourceTerms {
    Field F;
    Field G;
    /// L2 norm of (substituted form - closed form) of F.
    double f_discrepancy;
};

/// Rebuilds V, U, derivative caches, F and G from a temperature field.
ProfileState profile_from_theta(const Grid1D& grid, const PhysParams& p, Field theta, double t);

/// Samples Theta0 on the grid and derives the rest of the state at t = 0.
ProfileState build_profile(const Grid1D& grid, const PhysParams& p, const ProfileParams& prof);

/// F computed from the cached ln Theta derivatives in two algebraic forms:
/// the definitional display with (ln Theta)_xt eliminated through the Theta
/// equation (returned), and the closed coefficient form (compared against).
SourceTerms sources_FG(const ProfileState& state, const PhysParams& p, const Grid1D& grid);

/// Explicit rate s*Theta_x + a*(ln Theta)_xx with drift_slope() for the drift. Boundary
/// entries are zero; closures are applied by the stepper.
Field theta_rate(const Grid1D& grid, const PhysParams& p, const Field& theta);

/// Largest stable explicit step for the Theta equation alone.
double profile_dt(const Grid1D& grid, const PhysParams& p, double safety);

/// One midpoint RK2 step with Theta(0) = theta_minus and a zero-gradient
/// copy at x = L. Throws Error{PositivityLoss} if any node becomes <= 0.
ProfileState advance_profile(const ProfileState& state, double dt, const PhysParams& p,
                             const Grid1D& grid);

/// True when max |Theta - theta_plus| over the last 10% of the domain exceeds
/// 1e-3 |theta_plus - theta_minus|.
bool layer_near_boundary(const Grid1D& grid, const PhysParams& p, const Field& theta);

/// Discrete residuals of the profile system, time-centred between two
/// consecutive states of one run. All entries are L2 norms over the interior.
struct ProfileResidual {
    double mass;
    double momentum;
    double energy;
    double theta_step;  ///< residual of Theta_t - s Theta_x - a (ln Theta)_xx
};

/// Throws Error{StateMismatch} unless next.t > prev.t and both fit the grid.
ProfileResidual profile_residual(const ProfileState& prev, const ProfileState& next,
                                 const PhysParams& p, const Grid1D& grid);

/// Advances in equal steps (no larger than profile_dt(safety)) until t_end.
ProfileState evolve_profile(ProfileState state, double t_end, const PhysParams& p,
                            const Grid1D& grid, double safety);

}  // namespace vcw
