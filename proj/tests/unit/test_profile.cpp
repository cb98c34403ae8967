#include <algorithm>
#include <cmath>
#include <numbers>

#include "support.hpp"
#include "vcw/profile.hpp"

using namespace vcw;
using vcw::test::code_of;
using vcw::test::defaults;
using vcw::test::flat;

TEST_CASE("closed-form initial temperature") {
    const PhysParams p = defaults();
    const ProfileParams prof{};
    CHECK(theta0_eval(0.0, p, prof) == p.theta_minus);
    CHECK(theta0_eval(3.0, p, prof) == doctest::Approx(3.0 - 2.0 / std::numbers::e).epsilon(1e-14));
    CHECK(theta0_eval(1e8, p, prof) == doctest::Approx(p.theta_plus).epsilon(1e-14));
    CHECK(theta0_dx(0.0, p, prof) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("closed-form derivatives agree with finite differences of theta0") {
    const PhysParams p = defaults();
    for (const ProfileParams prof : {ProfileParams{1.0, 0.5, {}}, ProfileParams{2.0, 0.25, {}},
                                     ProfileParams{0.5, 1.0, {}}}) {
        const double h = 1e-3;
        for (double x : {0.3, 1.0, 4.0, 17.0}) {
            auto f = [&](double y) { return theta0_eval(y, p, prof); };
            const double d1 = (f(x + h) - f(x - h)) / (2 * h);
            const double d2 = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
            const double d3 = (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
            CHECK(theta0_dx(x, p, prof) == doctest::Approx(d1).epsilon(1e-5));
            CHECK(theta0_dxx(x, p, prof) == doctest::Approx(d2).epsilon(1e-4));
            CHECK(theta0_dxxx(x, p, prof) == doctest::Approx(d3).epsilon(1e-3));
        }
    }
}

TEST_CASE("constant profile when the boundary temperatures agree") {
    const PhysParams p = flat();
    const Grid1D g(50.0, 200);
    const ProfileState st = build_profile(g, p, ProfileParams{});
    for (std::size_t i = 0; i < g.nodes(); ++i) {
        CHECK(st.theta[i] == p.theta_minus);
        CHECK(st.V[i] == doctest::Approx(p.v_minus).epsilon(1e-15));
        CHECK(st.U[i] == p.u_b);
        CHECK(st.F[i] == 0.0);
        CHECK(st.G[i] == 0.0);
    }
    CHECK(st.f_discrepancy == 0.0);

    const ProfileState next = advance_profile(st, 0.7, p, g);
    for (std::size_t i = 0; i < g.nodes(); ++i) CHECK(next.theta[i] == p.theta_minus);
    CHECK(next.t == doctest::Approx(0.7));

    const ProfileResidual r = profile_residual(st, next, p, g);
    CHECK(r.mass <= 1e-13);
    CHECK(r.momentum <= 1e-13);
    CHECK(r.energy <= 1e-13);
    CHECK(r.theta_step <= 1e-13);
}

TEST_CASE("default profile at t = 0") {
    const PhysParams p = defaults();
    const Grid1D g(100.0, 10000);
    const ProfileState st = build_profile(g, p, ProfileParams{});
    CHECK(st.theta[0] == p.theta_minus);
    // One-sided second-order closure at x = 0; the exact value is 1.4.
    CHECK(std::abs(st.U[0] - 1.4) <= 1e-3);
    for (std::size_t i = 0; i < g.nodes(); ++i) {
        CHECK(p.R * st.theta[i] / st.V[i] == doctest::Approx(p.p_plus).epsilon(1e-15));
        CHECK(st.G[i] <= 0.0);
    }
    CHECK(st.f_discrepancy > 0.0);
    CHECK(std::isfinite(st.f_discrepancy));
}

TEST_CASE("one profile step keeps the maximum principle and the Dirichlet value") {
    const PhysParams p = defaults();
    const Grid1D g(400.0, 4000);
    const ProfileState st = build_profile(g, p, ProfileParams{});
    const ProfileState next = advance_profile(st, profile_dt(g, p, 0.4), p, g);
    const auto [lo, hi] = std::minmax_element(next.theta.begin(), next.theta.end());
    CHECK(*lo >= 1.0);
    CHECK(*hi <= 3.0);
    CHECK(next.theta[0] == p.theta_minus);
    CHECK(next.theta[g.cells()] == next.theta[g.cells() - 1]);
    CHECK_FALSE(next.layer_near_boundary);
}

TEST_CASE("mass residual is the rescaled temperature residual") {
    const PhysParams p = defaults();
    const Grid1D g(100.0, 400);
    ProfileState st = build_profile(g, p, ProfileParams{});
    const double dt = profile_dt(g, p, 0.4);
    for (int k = 0; k < 20; ++k) st = advance_profile(st, dt, p, g);
    const ProfileState next = advance_profile(st, dt, p, g);
    const ProfileResidual r = profile_residual(st, next, p, g);
    CHECK(std::abs(r.mass - p.R / p.p_plus * r.theta_step) <= 1e-10);
    CHECK(r.momentum > 0.0);
    CHECK(code_of([&] { profile_residual(next, st, p, g); }) == ErrorCode::StateMismatch);
}

TEST_CASE("profile stepping errors") {
    const PhysParams p = defaults();
    const Grid1D g(10.0, 100);
    const ProfileState st = build_profile(g, p, ProfileParams{});
    CHECK(code_of([&] { advance_profile(st, 0.0, p, g); }) == ErrorCode::NonPositiveTime);
    CHECK(code_of([&] { advance_profile(st, 50.0, p, g); }) == ErrorCode::PositivityLoss);
    CHECK(code_of([&] { profile_dt(g, p, 0.0); }) == ErrorCode::InvalidValue);
    CHECK(code_of([&] { build_profile(g, p, ProfileParams{1.0, 2.0, {}}); }) ==
          ErrorCode::InvalidProfileParameter);
}

TEST_CASE("layer warning fires when the layer reaches the far boundary") {
    const PhysParams p = defaults();
    const Grid1D g(5.0, 100);
    const ProfileState st = build_profile(g, p, ProfileParams{});
    CHECK(st.layer_near_boundary);
}

TEST_CASE("evolve_profile lands on the requested time") {
    const PhysParams p = defaults();
    const Grid1D g(50.0, 500);
    const ProfileState st = evolve_profile(build_profile(g, p, ProfileParams{}), 1.3, p, g, 0.4);
    CHECK(st.t == 1.3);
    const ProfileState coarse = evolve_profile(build_profile(g, p, ProfileParams{}), 1.3, p, g, 0.2);
    double diff = 0.0;
    for (std::size_t i = 0; i < g.nodes(); ++i) diff = std::max(diff, std::abs(st.theta[i] - coarse.theta[i]));
    CHECK(diff <= 1e-3);
}
