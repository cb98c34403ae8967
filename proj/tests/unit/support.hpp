#pragma once

#include <cstdint>
#include <random>

#include <doctest.h>

#include "vcw/error.hpp"
#include "vcw/params.hpp"

namespace vcw::test {

inline PhysParams defaults() { return build_params(GasInputs{}); }

inline PhysParams flat(double theta = 1.0) {
    GasInputs in;
    in.theta_minus = theta;
    in.theta_plus = theta;
    return build_params(in);
}

/// Runs fn and returns the ErrorCode it threw; fails the test if it did not throw.
template <class Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected vcw::Error");
    return ErrorCode::IoError;
}

/// Seeded generator for property sweeps; fixed seeds keep failures reproducible.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    GasInputs gas() {
        GasInputs in;
        in.R = uniform(0.3, 2.0);
        in.gamma = uniform(1.1, 1.8);
        in.mu = uniform(0.02, 0.5);
        in.kappa = uniform(0.1, 2.0);
        in.theta_minus = uniform(0.5, 2.0);
        in.theta_plus = in.theta_minus + uniform(-0.4, 3.0);
        in.v_minus = uniform(0.5, 2.0);
        in.u_b = uniform(0.2, 1.5);
        return in;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace vcw::test
