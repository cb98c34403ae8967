#include "vcw/params.hpp"

#include <cmath>
#include <string>

#include "vcw/error.hpp"

namespace vcw {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorCode::NonPositiveParameter,
                    std::string(name) + " must be a positive finite number, got " +
                        std::to_string(value));
    }
}

}  // namespace

PhysParams build_params(const GasInputs& in) {
    require_positive(in.R, "R");
    require_positive(in.gamma, "gamma");
    if (!(in.gamma > 1.0)) {
        throw Error(ErrorCode::GammaOutOfRange,
                    "gamma must exceed 1, got " + std::to_string(in.gamma));
    }
    require_positive(in.mu, "mu");
    require_positive(in.kappa, "kappa");
    require_positive(in.theta_minus, "theta_minus");
    require_positive(in.theta_plus, "theta_plus");
    require_positive(in.v_minus, "v_minus");
    require_positive(in.u_b, "u_b");

    PhysParams p{};
    p.R = in.R;
    p.gamma = in.gamma;
    p.mu = in.mu;
    p.kappa = in.kappa;
    p.theta_minus = in.theta_minus;
    p.theta_plus = in.theta_plus;
    p.v_minus = in.v_minus;
    p.u_b = in.u_b;

    p.p_plus = in.R * in.theta_minus / in.v_minus;
    p.v_plus = in.R * in.theta_plus / p.p_plus;
    p.s = -in.u_b / in.v_minus;
    p.a = in.kappa * p.p_plus * (in.gamma - 1.0) / (in.gamma * in.R * in.R);
    p.c_v = in.R / (in.gamma - 1.0);
    return p;
}

double AlphaCoupling::alpha_for(double kappa) const { return scale * std::pow(kappa, exponent); }

void validate(const ProfileParams& prof) {
    if (!(prof.alpha > 0.0) || !std::isfinite(prof.alpha)) {
        throw Error(ErrorCode::InvalidProfileParameter, "alpha must be positive");
    }
    if (!(prof.delta0 > 0.0 && prof.delta0 <= 1.0)) {
        throw Error(ErrorCode::InvalidProfileParameter, "delta0 must lie in (0, 1]");
    }
    if (!(prof.coupling.scale > 0.0) || !std::isfinite(prof.coupling.exponent)) {
        throw Error(ErrorCode::InvalidProfileParameter, "alpha coupling must have positive scale");
    }
}

PhysParams with_kappa(const PhysParams& p, double kappa) {
    GasInputs in{p.R, p.gamma, p.mu, kappa, p.theta_minus, p.theta_plus, p.v_minus, p.u_b};
    return build_params(in);
}

}  // namespace vcw
