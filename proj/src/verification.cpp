#include "vcw/verification.hpp"

#include <cmath>

#include "vcw/error.hpp"
#include "vcw/ns_solver.hpp"
#include "vcw/profile.hpp"

namespace vcw {

RhsTruncation rhs_truncation_error(const Grid1D& grid, const PhysParams& p,
                                   const ProfileParams& prof) {
    const std::size_t m = grid.nodes();
    const double c = p.u_coeff();
    const double f_coeff = c * (p.a - p.mu * p.p_plus / p.R);

    FluidState exact{0.0, Field(m), Field(m), Field(m)};
    Field v_t(m), u_t(m), theta_t(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = grid.x(i);
        const double th = theta0_eval(x, p, prof);
        const double d1 = theta0_dx(x, p, prof) / th;
        const double d2 = theta0_dxx(x, p, prof) / th;
        const double d3 = theta0_dxxx(x, p, prof) / th;
        // Derivatives of g = ln Theta.
        const double g1 = d1;
        const double g2 = d2 - d1 * d1;
        const double g3 = d3 - 3.0 * d1 * d2 + 2.0 * d1 * d1 * d1;
        const double flux_x = g3 / th - g2 * d1 / th;  // (g''/Theta)_x

        const double V = p.R * th / p.p_plus;
        exact.v[i] = V;
        exact.u[i] = c * g1 + p.u_b;
        exact.theta[i] = th;

        const double th_t = p.s * th * d1 + p.a * g2;
        const double U_t = c * (p.s * g2 + p.a * flux_x);
        const double F = f_coeff * flux_x;
        const double G = -p.mu * (c * g2) * (c * g2) / V;
        theta_t[i] = th_t - G / p.c_v;
        v_t[i] = p.R / p.p_plus * th_t;
        u_t[i] = U_t - F;
    }

    const Tendencies k = compute_rhs(exact, p, grid);
    auto err = [&](const Field& got, const Field& want) {
        Field e(m);
        for (std::size_t i = 1; i + 1 < m; ++i) e[i] = got[i] - want[i];
        return std::sqrt(l2sq(grid, e));
    };
    return RhsTruncation{err(k.v_t, v_t), err(k.u_t, u_t), err(k.theta_t, theta_t)};
}

double observed_order(double e_coarse, double e_fine, std::size_t n_coarse, std::size_t n_fine) {
    return std::log(e_coarse / e_fine) /
           std::log(static_cast<double>(n_fine) / static_cast<double>(n_coarse));
}

std::vector<double> pairwise_orders(const std::vector<double>& errors,
                                    const std::vector<std::size_t>& cells) {
    if (errors.size() != cells.size() || errors.size() < 2) {
        throw Error(ErrorCode::InvalidValue, "order needs at least two matching levels");
    }
    std::vector<double> orders;
    for (std::size_t k = 1; k < errors.size(); ++k) {
        orders.push_back(observed_order(errors[k - 1], errors[k], cells[k - 1], cells[k]));
    }
    return orders;
}

double finest_pair_order(const std::vector<double>& errors, const std::vector<std::size_t>& cells) {
    return pairwise_orders(errors, cells).back();
}

}  // namespace vcw
