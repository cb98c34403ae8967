#include <cmath>

#include "support.hpp"
#include "vcw/heat_reference.hpp"
#include "vcw/profile.hpp"

using namespace vcw;
using vcw::test::code_of;
using vcw::test::defaults;
using vcw::test::flat;

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

/// Closed form of the reflected-kernel integrals for delta0 = 1, where
/// Theta0 - theta_minus = jump (1 - e^{-alpha h}).
struct ExactExponential {
    PhysParams p;
    double alpha;

    double half_line(double c, double sigma) const {
        const double shift = alpha * sigma * sigma;
        return p.jump() * (normal_cdf(c / sigma) -
                           std::exp(-alpha * c + 0.5 * shift * alpha) * normal_cdf((c - shift) / sigma));
    }
    Theta2Value at(double x, double t) const {
        const double sigma = std::sqrt(2.0 * p.a * t);
        const double c1 = x + p.s * t;
        const double c2 = p.s * t - x;
        const double shift = alpha * sigma * sigma;
        const double k = p.jump() * alpha * std::exp(-alpha * c2 + 0.5 * shift * alpha) *
                         normal_cdf((c2 - shift) / sigma);
        return {p.theta_minus + half_line(c1, sigma) - half_line(c2, sigma), k};
    }
};

}  // namespace

TEST_CASE("theta2 matches the closed form for an exponential initial layer") {
    const PhysParams p = defaults();
    const ProfileParams prof{1.5, 1.0, {}};
    const ExactExponential exact{p, 1.5};
    // The kernel window is cut at h = 0 where the slope integrand is
    // nonzero, so the trapezoid error falls with the square of the node count.
    const KernelQuadSpec fine{10.0, 20001};
    for (double t : {0.3, 1.0, 4.0}) {
        for (double x : {0.0, 0.4, 2.0, 6.0}) {
            const Theta2Value want = exact.at(x, t);
            const Theta2Value got = eval_theta2_and_K(x, t, p, prof);
            const Theta2Value sharp = eval_theta2_and_K(x, t, p, prof, fine);
            CHECK(std::abs(got.theta2 - want.theta2) <= 2e-5);
            CHECK(std::abs(got.K - want.K) <= 2e-5);
            CHECK(std::abs(sharp.theta2 - want.theta2) <= 2e-7);
            CHECK(std::abs(sharp.K - want.K) <= 2e-7);
        }
    }
}

TEST_CASE("theta2 boundary identity and flat case") {
    const PhysParams p = defaults();
    for (double t : {0.1, 1.0, 10.0}) {
        CHECK(std::abs(eval_theta2_and_K(0.0, t, p, ProfileParams{}).theta2 - p.theta_minus) <= 1e-10);
    }
    const PhysParams q = flat(1.7);
    const Grid1D g(20.0, 100);
    const Theta2Field f = theta2_on_grid(g, 2.0, q, ProfileParams{});
    for (std::size_t i = 0; i < g.nodes(); ++i) {
        CHECK(f.theta2[i] == 1.7);
        CHECK(f.K[i] == 0.0);
    }
    CHECK(theta2_residual(g, 2.0, 0.1, q, ProfileParams{}) <= 1e-12);
}

TEST_CASE("theta2 tends to the initial profile as t -> 0") {
    const PhysParams p = defaults();
    const ProfileParams prof{};
    const double th2 = eval_theta2_and_K(1.0, 1e-4, p, prof).theta2;
    CHECK(std::abs(th2 - theta0_eval(1.0, p, prof)) <= 1e-3);
}

TEST_CASE("theta2 stays within the boundary temperatures and K is non-negative") {
    const PhysParams p = defaults();
    const Grid1D g(40.0, 80);
    for (double t : {0.5, 5.0, 50.0}) {
        const Theta2Field f = theta2_on_grid(g, t, p, ProfileParams{});
        for (std::size_t i = 0; i < g.nodes(); ++i) {
            CHECK(f.theta2[i] >= p.theta_minus - 1e-12);
            CHECK(f.theta2[i] <= p.theta_plus + 1e-12);
            CHECK(f.K[i] >= 0.0);
        }
    }
}

TEST_CASE("theta2 residual shrinks under joint refinement") {
    const PhysParams p = defaults();
    const Grid1D coarse(20.0, 100), fine(20.0, 200);
    const double r1 = theta2_residual(coarse, 1.0, coarse.dx(), p, ProfileParams{});
    const double r2 = theta2_residual(fine, 1.0, fine.dx(), p, ProfileParams{});
    CHECK(std::log2(r1 / r2) >= 1.5);
}

TEST_CASE("theta2 residual at t = 1 is below the calibrated threshold") {
    // Calibrated on L = 100: 2.0e-2, 5.4e-3, 1.4e-3 at n = 200, 400, 800.
    const Grid1D g(100.0, 1600);
    CHECK(theta2_residual(g, 1.0, g.dx(), defaults(), ProfileParams{}) <= 1e-3);
}

TEST_CASE("heat reference errors") {
    const PhysParams p = defaults();
    CHECK(code_of([&] { eval_theta2_and_K(1.0, 0.0, p, ProfileParams{}); }) == ErrorCode::NonPositiveTime);
    CHECK(code_of([&] { eval_theta2_and_K(1.0, 1.0, p, ProfileParams{}, {5.0, 2001}); }) ==
          ErrorCode::InvalidQuadrature);
    CHECK(code_of([&] { eval_theta2_and_K(1.0, 1.0, p, ProfileParams{}, {10.0, 2000}); }) ==
          ErrorCode::InvalidQuadrature);
    const Grid1D g(10.0, 50);
    CHECK(code_of([&] { theta2_residual(g, 0.1, 0.2, p, ProfileParams{}); }) == ErrorCode::NonPositiveTime);
}
