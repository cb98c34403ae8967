#pragma once

#include <cstddef>
#include <vector>

#include "vcw/grid.hpp"
#include "vcw/params.hpp"

namespace vcw {

/// Interior L2 error of compute_rhs() applied to the closed-form profile at
/// t = 0, measured against the exact tendencies (V_t, U_t - F, Theta_t - G/c_v)
/// of that profile.
struct RhsTruncation {
    double v;
    double u;
    double theta;
};

RhsTruncation rhs_truncation_error(const Grid1D& grid, const PhysParams& p,
                                   const ProfileParams& prof);

/// Observed order log(e_coarse/e_fine)/log(n_fine/n_coarse).
double observed_order(double e_coarse, double e_fine, std::size_t n_coarse, std::size_t n_fine);

/// Observed order of every consecutive pair of levels.
std::vector<double> pairwise_orders(const std::vector<double>& errors,
                                    const std::vector<std::size_t>& cells);

/// Observed order of the two finest levels. Needs matching sizes >= 2.
double finest_pair_order(const std::vector<double>& errors, const std::vector<std::size_t>& cells);

}  // namespace vcw
