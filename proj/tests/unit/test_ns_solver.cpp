#include <algorithm>
#include <cmath>
#include <numbers>

#include "support.hpp"
#include "vcw/ns_solver.hpp"

using namespace vcw;
using vcw::test::code_of;
using vcw::test::defaults;
using vcw::test::flat;

namespace {

FluidState unperturbed(const Grid1D& g, const PhysParams& p) {
    return initialize_state(g, build_profile(g, p, ProfileParams{}), PerturbSpec{}, p);
}

FluidState run_fluid(const Grid1D& g, const PhysParams& p, double t_end) {
    FluidState s = unperturbed(g, p);
    const double dt_max = cfl_dt(s, p, g, 0.4);
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt_max));
    const double dt = t_end / static_cast<double>(steps);
    for (std::size_t k = 0; k < steps; ++k) s = advance(s, dt, p, g);
    return s;
}

/// Sup distance between a field and a twice finer one at shared nodes.
double coarse_gap(const Field& coarse, const Field& fine) {
    double gap = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i) gap = std::max(gap, std::abs(coarse[i] - fine[2 * i]));
    return gap;
}

}  // namespace

TEST_CASE("constant steady state has zero tendencies and does not drift") {
    const PhysParams p = flat();
    const Grid1D g(40.0, 400);
    FluidState s{0.0, Field(g, p.v_minus), Field(g, p.u_b), Field(g, p.theta_minus)};
    const Tendencies k = compute_rhs(s, p, g);
    for (std::size_t i = 0; i < g.nodes(); ++i) {
        CHECK(k.v_t[i] == 0.0);
        CHECK(k.u_t[i] == 0.0);
        CHECK(k.theta_t[i] == 0.0);
    }
    const FluidState start = s;
    const double dt = cfl_dt(s, p, g, 0.4);
    for (int step = 0; step < 1000; ++step) s = advance(s, dt, p, g);
    double drift = 0.0;
    for (std::size_t i = 0; i < g.nodes(); ++i) {
        drift = std::max({drift, std::abs(s.v[i] - start.v[i]), std::abs(s.u[i] - start.u[i]),
                          std::abs(s.theta[i] - start.theta[i])});
    }
    CHECK(drift <= 1e-10);
    CHECK(s.t == doctest::Approx(1000 * dt));
}

TEST_CASE("cfl bound arithmetic") {
    const PhysParams p = defaults();
    const Grid1D g(20.0, 400);
    const FluidState s = unperturbed(g, p);
    CHECK(cfl_dt(s, p, g, 0.4) == doctest::Approx(7.5e-4).epsilon(1e-12));

    const Grid1D coarse(20.0, 200);
    const FluidState sc = unperturbed(coarse, p);
    CHECK(cfl_dt(sc, p, coarse, 0.4) / cfl_dt(s, p, g, 0.4) == doctest::Approx(4.0).epsilon(1e-12));

    CHECK(code_of([&] { cfl_dt(s, p, g, 0.0); }) == ErrorCode::InvalidValue);
    CHECK(code_of([&] { cfl_dt(s, p, g, 1.5); }) == ErrorCode::InvalidValue);
}

TEST_CASE("initial state without perturbation") {
    const PhysParams p = defaults();
    const Grid1D g(100.0, 1000);
    const ProfileState prof = build_profile(g, p, ProfileParams{});
    const FluidState s = initialize_state(g, prof, PerturbSpec{}, p);
    CHECK(s.u[0] == doctest::Approx(p.u_b).epsilon(1e-15));
    const Perturbation d = extract_perturbation(s, prof);
    for (std::size_t i = 0; i < g.nodes(); ++i) {
        CHECK(d.phi[i] == 0.0);
        CHECK(d.zeta[i] == 0.0);
    }
    // psi carries only the boundary tail; its value at 0 is -u_coeff (ln Theta)_x(0).
    CHECK(d.psi[0] == doctest::Approx(-p.u_coeff() * prof.ln_x[0]).epsilon(1e-14));
    CHECK(d.psi[0] < 0.0);
    CHECK(std::abs(d.psi[g.cells()]) <= 1e-8);
}

TEST_CASE("initial bump has the closed-form L2 size and vanishes at x = 0") {
    const PhysParams p = defaults();
    const Grid1D g(400.0, 4000);
    const ProfileState prof = build_profile(g, p, ProfileParams{});
    const PerturbSpec spec{0.05, 0.03, -0.02, 5.0, 0.0};
    const FluidState s = initialize_state(g, prof, spec, p);
    const Perturbation d = extract_perturbation(s, prof);
    CHECK(d.phi[0] == 0.0);
    CHECK(d.zeta[0] == 0.0);
    // int_0^inf ((x/w) e^{1-x/w})^2 dx = w e^2 / 4
    const double exact = 0.05 * 0.05 * 5.0 * std::numbers::e * std::numbers::e / 4.0;
    CHECK(l2sq(g, d.phi) == doctest::Approx(exact).epsilon(1e-4));
    CHECK(spec.bump(5.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(PerturbSpec{1.0, 0, 0, 2.0, 3.0}.bump(2.0) == 0.0);
}

TEST_CASE("tracking the profile converges under refinement") {
    const PhysParams p = defaults();
    const Grid1D g1(40.0, 200), g2(40.0, 400), g3(40.0, 800);
    const FluidState a = run_fluid(g1, p, 1.0);
    const FluidState b = run_fluid(g2, p, 1.0);
    const FluidState c = run_fluid(g3, p, 1.0);
    const double e1 = std::max({coarse_gap(a.v, b.v), coarse_gap(a.u, b.u), coarse_gap(a.theta, b.theta)});
    const double e2 = std::max({coarse_gap(b.v, c.v), coarse_gap(b.u, c.u), coarse_gap(b.theta, c.theta)});
    CHECK(e2 < e1);
    CHECK(std::log2(e1 / e2) >= 0.8);
}

TEST_CASE("solver error paths") {
    const PhysParams p = defaults();
    const Grid1D g(20.0, 100);
    const ProfileState prof = build_profile(g, p, ProfileParams{});
    CHECK(code_of([&] { initialize_state(g, prof, PerturbSpec{-5.0, 0, 0, 5.0, 0.0}, p); }) ==
          ErrorCode::PositivityLoss);
    CHECK(code_of([&] { initialize_state(g, prof, PerturbSpec{0, 0, 0, 0.0, 0.0}, p); }) ==
          ErrorCode::InvalidPerturbation);
    CHECK(code_of([&] { initialize_state(g, prof, PerturbSpec{0, 0, 0, 1.0, -1.0}, p); }) ==
          ErrorCode::InvalidPerturbation);

    FluidState s = initialize_state(g, prof, PerturbSpec{}, p);
    CHECK(code_of([&] { advance(s, 0.0, p, g); }) == ErrorCode::NonPositiveTime);
    CHECK(code_of([&] { advance(s, 10.0, p, g); }) == ErrorCode::PositivityLoss);
    s.t = 1.0;
    CHECK(code_of([&] { extract_perturbation(s, prof); }) == ErrorCode::StateMismatch);
    s.theta[3] = -1.0;
    CHECK(code_of([&] { compute_rhs(s, p, g); }) == ErrorCode::PositivityLoss);
}
