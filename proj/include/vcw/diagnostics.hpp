#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcw/grid.hpp"
#include "vcw/heat_reference.hpp"
#include "vcw/ns_solver.hpp"
#include "vcw/params.hpp"
#include "vcw/profile.hpp"

namespace vcw {

/// One measured quantity compared against a threshold.
struct Check {
    enum class Sense { at_most, at_least };

    std::string name;
    double measured;
    double threshold;
    Sense sense;
    bool pass;

    static Check at_most(std::string name, double measured, double threshold);
    static Check at_least(std::string name, double measured, double threshold);
    /// Boolean condition reported as measured 1/0 against threshold 1.
    static Check holds(std::string name, bool ok);
};

/// Relative entropy weight z - ln z - 1. Throws Error{NonPositiveArgument} for z <= 0.
double entropy_phi(double z);

// ---------------------------------------------------------------------------
// Profile decay

struct DecayRecord {
    double t;
    double ln_x_sq;
    double ln_xx_sq;
    double ln_xxx_sq;
    double bdry_ln_x_sq;
    double bdry_ln_xx_sq;
    double theta_x_sq;
    double theta_minus_theta2_sq;
};

DecayRecord profile_decay_record(const ProfileState& profile, const Field& theta2_at_t,
                                 const Grid1D& grid);

struct TimeValue {
    double t;
    double value;
};

/// value ~ amplitude * (1 + t)^exponent, least squares in log-log.
struct DecayFit {
    double exponent;
    double amplitude;
    double t0;
    double t1;
    double goodness;  ///< coefficient of determination, clamped to [0, 1]
    std::size_t samples;
};

/// Fits samples with t in [t0, t1]. Requires t0 >= 1, t1 > t0 and at least
/// 8 samples in the window (Error{InsufficientSamples}); every value in the
/// window must be positive (Error{NonPositiveValue}).
DecayFit fit_power_law(std::span<const TimeValue> series, double t0, double t1);

// ---------------------------------------------------------------------------
// Energy method

struct EnergyRecord {
    double t;
    double E;        ///< int psi^2/2 + R Theta Phi(v/V) + c_v Theta Phi(theta/Theta)
    double E_local;  ///< same with R theta Phi(v/V) in the second term
    double D;        ///< int mu Theta psi_x^2/(v theta) + kappa Theta zeta_x^2/(v theta^2)
    double cumulative_D;
    double N;  ///< H1 norm of (phi, psi, zeta)
};

/// Instantaneous E, D and N; cumulative_D is left at zero for the caller.
/// Throws Error{PositivityLoss} if v, theta, V or Theta is not positive.
EnergyRecord energy_and_dissipation(const Perturbation& pert, const FluidState& fluid,
                                    const ProfileState& profile, const PhysParams& p,
                                    const Grid1D& grid);

struct PoincareTerms {
    double numerator;    ///< int Theta_x^2 (phi^2 + zeta^2)
    double denominator;  ///< ||phi_x||^2 + ||zeta_x||^2
};

PoincareTerms poincare_terms(const Perturbation& pert, const ProfileState& profile,
                             const Grid1D& grid);

/// numerator / denominator, or nullopt when the denominator vanishes.
std::optional<double> poincare_ratio(const Perturbation& pert, const ProfileState& profile,
                                     const Grid1D& grid);

/// max - min over the nodes.
double oscillation(const Field& theta);

/// sup|f|^2 / (2 ||f|| ||f_x||); at most 1 for H1 functions on the half-line.
double sup_interpolation_ratio(const Field& f, const Grid1D& grid);

// ---------------------------------------------------------------------------
// kappa -> 0 study

struct KappaRow {
    double kappa;
    double alpha;
    double a;
    double theta_l1;
    double theta_l2;
    double v_l1;
    std::vector<double> u_lp;  ///< one entry per requested exponent
};

struct KappaStudy {
    std::vector<double> kappas;
    std::vector<double> exponents{1.0, 2.0};
    double horizon = 5.0;
    double safety = 0.4;
};

/// Runs the profile to `horizon` for every kappa (alpha from the coupling in
/// `prof`) and measures distances to the inviscid step with the jump at
/// x = -s*horizon. Rows keep the order of `study.kappas`.
/// Throws Error{LayerContainmentViolated} if -s*horizon > 0.9 L.
std::vector<KappaRow> kappa_limit_study(const KappaStudy& study, const PhysParams& base,
                                        const ProfileParams& prof, const Grid1D& grid);

// ---------------------------------------------------------------------------
// Theta0 battery

struct Theta0SweepRow {
    double alpha;
    double delta0;
    double theta_x_sq;   ///< ||Theta0_x||^2 over the half-line
    double weighted_sq;  ///< int Theta0_x^2 (1 + alpha x) over the half-line
    double theta_x_sq_ratio;
    double weighted_ratio;
};

struct Theta0Report {
    double slope_l1;       ///< ||Theta0_x||_L1 over the half-line
    double slope_l1_grid;  ///< telescoped sum of |Delta Theta0| over the grid nodes
    double tail_l1;        ///< ||Theta0 - theta_plus||_L1 over the half-line
    double min_signed_slope;
    double envelope_ratio;  ///< max over nodes of Theta0_x / envelope (C = |jump| e)
    std::vector<Theta0SweepRow> sweep;
    double theta_x_sq_span;  ///< max/min of theta_x_sq_ratio across the sweep
    double weighted_span;
    std::vector<Check> checks;
};

/// Integral over [0, inf) of g by the substitution z = (1 + alpha x)^delta0.
template <class Fn>
double half_line_integral(Fn&& g, const ProfileParams& prof, double z_span = 60.0,
                          int intervals = 60000);

Theta0Report theta0_checks(const PhysParams& p, const ProfileParams& prof, const Grid1D& grid);

// ---------------------------------------------------------------------------

template <class Fn>
double half_line_integral(Fn&& g, const ProfileParams& prof, double z_span, int intervals) {
    // Composite Simpson in z on [1, 1 + z_span].
    const double inv_d = 1.0 / prof.delta0;
    auto integrand = [&](double z) {
        const double x = (std::pow(z, inv_d) - 1.0) / prof.alpha;
        const double dxdz = std::pow(z, inv_d - 1.0) / (prof.alpha * prof.delta0);
        return g(x) * dxdz;
    };
    if (intervals % 2 != 0) ++intervals;
    const double h = z_span / static_cast<double>(intervals);
    double sum = integrand(1.0) + integrand(1.0 + z_span);
    for (int k = 1; k < intervals; ++k) {
        sum += (k % 2 == 1 ? 4.0 : 2.0) * integrand(1.0 + h * static_cast<double>(k));
    }
    return sum * h / 3.0;
}

}  // namespace vcw
