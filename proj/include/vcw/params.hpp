#pragma once

namespace vcw {

/// Raw, user-supplied gas and boundary data. Everything else is derived.
struct GasInputs {
    double R = 1.0;
    double gamma = 5.0 / 3.0;
    double mu = 0.1;
    double kappa = 1.0;
    double theta_minus = 1.0;
    double theta_plus = 3.0;
    double v_minus = 1.0;
    double u_b = 1.0;
};

/// Physical constants of the inflow problem in shifted Lagrangian coordinates.
///
/// Only obtainable through build_params(), which derives v_plus from pressure
/// matching so that R*theta_minus/v_minus == R*theta_plus/v_plus always holds.
struct PhysParams {
    double R;
    double gamma;
    double mu;
    double kappa;
    double theta_minus;
    double theta_plus;
    double v_minus;
    double u_b;

    double p_plus;  ///< matched pressure R*theta_minus/v_minus
    double v_plus;  ///< R*theta_plus/p_plus
    double s;       ///< shift speed -u_b/v_minus (< 0)
    double a;       ///< kappa*p_plus*(gamma-1)/(gamma*R^2)
    double c_v;     ///< R/(gamma-1)

    /// Coefficient kappa*(gamma-1)/(gamma*R) relating U - u_b to (ln Theta)_x.
    double u_coeff() const { return kappa * (gamma - 1.0) / (gamma * R); }
    double theta_min() const { return theta_minus < theta_plus ? theta_minus : theta_plus; }
    double theta_max() const { return theta_minus < theta_plus ? theta_plus : theta_minus; }
    double jump() const { return theta_plus - theta_minus; }
};

/// Validates inputs (all > 0, gamma > 1) and derives p_plus, v_plus, s, a, c_v.
/// Throws Error{NonPositiveParameter} naming the field, or Error{GammaOutOfRange}.
PhysParams build_params(const GasInputs& in);

/// alpha(kappa) = scale * kappa^exponent, used by the kappa -> 0 study.
struct AlphaCoupling {
    double scale = 1.0;
    double exponent = -2.0;

    double alpha_for(double kappa) const;
};

/// Shape of the initial temperature
///   Theta0(x) = theta_plus - (theta_plus - theta_minus) * exp(1 - (1 + alpha x)^delta0).
struct ProfileParams {
    double alpha = 1.0;
    double delta0 = 0.5;
    AlphaCoupling coupling{};
};

/// Throws Error{InvalidProfileParameter} unless alpha > 0 and 0 < delta0 <= 1.
void validate(const ProfileParams& prof);

/// Same gas with a different heat conductivity (a is re-derived).
PhysParams with_kappa(const PhysParams& p, double kappa);

}  // namespace vcw
