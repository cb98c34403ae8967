#include "vcw/heat_reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vcw/error.hpp"
#include "vcw/profile.hpp"

namespace vcw {

namespace {

/// Trapezoid integral of g(h) * exp(-(h - center)^2 / width2) over
/// [max(0, center - reach), center + reach]; zero if that is empty.
template <class Fn>
double gaussian_window(double center, double width2, double reach, int nodes, Fn&& g) {
    const double hi = center + reach;
    if (hi <= 0.0) return 0.0;
    const double lo = std::max(0.0, center - reach);
    const double step = (hi - lo) / static_cast<double>(nodes - 1);
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double h = lo + step * static_cast<double>(j);
        const double d = h - center;
        const double term = g(h) * std::exp(-d * d / width2);
        sum += (j == 0 || j == nodes - 1) ? 0.5 * term : term;
    }
    return sum * step;
}

}  // namespace

void validate(const KernelQuadSpec& spec) {
    if (!(spec.half_width_sigmas >= 6.0)) {
        throw Error(ErrorCode::InvalidQuadrature, "half_width_sigmas must be >= 6");
    }
    if (spec.sub_nodes < 101 || spec.sub_nodes % 2 == 0) {
        throw Error(ErrorCode::InvalidQuadrature, "sub_nodes must be odd and >= 101");
    }
}

Theta2Value eval_theta2_and_K(double x, double t, const PhysParams& p, const ProfileParams& prof,
                              const KernelQuadSpec& spec) {
    if (!(t > 0.0)) throw Error(ErrorCode::NonPositiveTime, "theta2 needs t > 0");
    validate(spec);

    const double width2 = 4.0 * p.a * t;
    const double norm = 1.0 / std::sqrt(std::numbers::pi * width2);
    const double reach = spec.half_width_sigmas * std::sqrt(width2);

    auto excess = [&](double h) { return theta0_eval(h, p, prof) - p.theta_minus; };
    auto slope = [&](double h) { return theta0_dx(h, p, prof); };

    // Direct image is centred at h = x + s t, the reflected one at h = s t - x.
    const double direct_center = x + p.s * t;
    const double mirror_center = p.s * t - x;

    const double direct = gaussian_window(direct_center, width2, reach, spec.sub_nodes, excess);
    const double mirror = gaussian_window(mirror_center, width2, reach, spec.sub_nodes, excess);
    const double k = gaussian_window(mirror_center, width2, reach, spec.sub_nodes, slope);

    return Theta2Value{p.theta_minus + norm * (direct - mirror), norm * k};
}

Theta2Field theta2_on_grid(const Grid1D& grid, double t, const PhysParams& p,
                           const ProfileParams& prof, const KernelQuadSpec& spec) {
    Theta2Field out{Field(grid), Field(grid)};
    for (std::size_t i = 0; i < grid.nodes(); ++i) {
        const Theta2Value v = eval_theta2_and_K(grid.x(i), t, p, prof, spec);
        out.theta2[i] = v.theta2;
        out.K[i] = v.K;
    }
    return out;
}

double theta2_residual(const Grid1D& grid, double t, double dt, const PhysParams& p,
                       const ProfileParams& prof, const KernelQuadSpec& spec) {
    if (!(dt > 0.0) || !(t > dt)) {
        throw Error(ErrorCode::NonPositiveTime, "theta2 residual needs t > dt > 0");
    }
    const Theta2Field before = theta2_on_grid(grid, t - dt, p, prof, spec);
    const Theta2Field now = theta2_on_grid(grid, t, p, prof, spec);
    const Theta2Field after = theta2_on_grid(grid, t + dt, p, prof, spec);

    const std::size_t n = grid.cells();
    const double dx = grid.dx();
    Field r(grid);
    for (std::size_t i = 1; i < n; ++i) {
        const double th_t = (after.theta2[i] - before.theta2[i]) / (2.0 * dt);
        const double th_x = (now.theta2[i + 1] - now.theta2[i - 1]) / (2.0 * dx);
        const double th_xx =
            (now.theta2[i + 1] - 2.0 * now.theta2[i] + now.theta2[i - 1]) / (dx * dx);
        r[i] = th_t - p.s * th_x - p.a * th_xx + 2.0 * p.s * now.K[i];
    }
    return std::sqrt(l2sq(grid, r));
}

}  // namespace vcw
