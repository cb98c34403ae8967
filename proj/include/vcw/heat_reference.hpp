#pragma once

#include "vcw/grid.hpp"
#include "vcw/params.hpp"

namespace vcw {

/// Truncation and resolution of the Gaussian kernel integrals.
struct KernelQuadSpec {
    double half_width_sigmas = 10.0;  ///< in units of sqrt(4 a t); >= 6
    int sub_nodes = 2001;             ///< trapezoid nodes per integral; odd, >= 101
};

/// Throws Error{InvalidQuadrature} on a spec that violates the bounds above.
void validate(const KernelQuadSpec& spec);

struct Theta2Value {
    double theta2;
    double K;
};

/// Linear drift-diffusion reference built from Theta0 by the odd reflection
/// about x = 0, and the correction term K it produces in its own equation
///   theta2_t - s theta2_x = a theta2_xx - 2 s K.
/// Throws Error{NonPositiveTime} for t <= 0.
Theta2Value eval_theta2_and_K(double x, double t, const PhysParams& p, const ProfileParams& prof,
                              const KernelQuadSpec& spec = {});

/// theta2 and K at every node of the grid.
struct Theta2Field {
    Field theta2;
    Field K;
};
Theta2Field theta2_on_grid(const Grid1D& grid, double t, const PhysParams& p,
                           const ProfileParams& prof, const KernelQuadSpec& spec = {});

/// L2 norm (interior nodes) of theta2_t - s theta2_x - a theta2_xx + 2 s K,
/// with centred differences in t (step dt) and x (grid spacing).
/// Requires t > dt > 0.
double theta2_residual(const Grid1D& grid, double t, double dt, const PhysParams& p,
                       const ProfileParams& prof, const KernelQuadSpec& spec = {});

}  // namespace vcw
