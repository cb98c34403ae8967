#pragma once

#include "vcw/grid.hpp"
#include "vcw/params.hpp"
#include "vcw/profile.hpp"

namespace vcw {

/// Specific volume, velocity and temperature of the inflow problem.
struct FluidState {
    double t = 0.0;
    Field v;
    Field u;
    Field theta;
};

/// Deviation of a FluidState from the profile at the same instant.
struct Perturbation {
    Field phi;
    Field psi;
    Field zeta;
};

/// Initial bump b(x) = ((x - center)/width) exp(1 - (x - center)/width) for
/// x >= center, zero before; with center = 0 it vanishes only at x = 0 and
/// peaks at x = width.
struct PerturbSpec {
    double amp_phi = 0.0;
    double amp_psi = 0.0;
    double amp_zeta = 0.0;
    double width = 5.0;
    double center = 0.0;

    double bump(double x) const;
};

/// Throws Error{InvalidPerturbation} unless width > 0 and center >= 0.
void validate(const PerturbSpec& spec);

/// Profile plus perturbation. psi additionally carries
/// (u_b - U(0,0)) exp(-x/width) so that u(0) = u_b.
/// Throws Error{PositivityLoss} if v or theta is not positive somewhere.
FluidState initialize_state(const Grid1D& grid, const ProfileState& profile0,
                            const PerturbSpec& spec, const PhysParams& p);

struct Tendencies {
    Field v_t;
    Field u_t;
    Field theta_t;
};

/// Semi-discrete right-hand side of the Lagrangian system. Drift terms use
/// drift_slope() (the drift speed -s is positive); viscous and heat fluxes use
/// flux differences with arithmetic-mean interface volumes. Boundary entries
/// are zero. Throws Error{PositivityLoss} on non-positive v or theta.
Tendencies compute_rhs(const FluidState& state, const PhysParams& p, const Grid1D& grid);

/// Explicit step bound from the advective (drift, flow and Lagrangian sound
/// speed) and diffusive (mu/v, kappa(gamma-1)/(R v), a/min Theta) limits.
/// Throws Error{InvalidValue} unless 0 < safety <= 1.
double cfl_dt(const FluidState& state, const PhysParams& p, const Grid1D& grid, double safety);

/// One midpoint RK2 step. After each stage node 0 is reset to
/// (v_minus, u_b, theta_minus) and node n copies node n-1.
/// Throws Error{PositivityLoss} naming the first bad node and time.
FluidState advance(const FluidState& state, double dt, const PhysParams& p, const Grid1D& grid);

/// Throws Error{StateMismatch} when sizes or times differ.
Perturbation extract_perturbation(const FluidState& state, const ProfileState& profile);

}  // namespace vcw
