#include <cmath>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "vcw/diagnostics.hpp"

using namespace vcw;
using vcw::test::code_of;
using vcw::test::defaults;
using vcw::test::flat;

namespace {

std::vector<TimeValue> power_series(double amplitude, double exponent, double t0, double t1,
                                    int count) {
    std::vector<TimeValue> out;
    for (int k = 0; k < count; ++k) {
        const double t = t0 + (t1 - t0) * k / (count - 1);
        out.push_back({t, amplitude * std::pow(1.0 + t, exponent)});
    }
    return out;
}

/// Composite Simpson of g on [lo, hi].
template <class Fn>
double simpson(Fn&& g, double lo, double hi, int intervals) {
    const double h = (hi - lo) / intervals;
    double sum = g(lo) + g(hi);
    for (int k = 1; k < intervals; ++k) sum += (k % 2 ? 4.0 : 2.0) * g(lo + k * h);
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("entropy weight") {
    CHECK(entropy_phi(1.0) == 0.0);
    CHECK(entropy_phi(std::numbers::e) == doctest::Approx(std::numbers::e - 2.0).epsilon(1e-15));
    for (double z : {0.5, 2.0, 4.0}) {
        const double m = std::max(1.0, z);
        CHECK(entropy_phi(z) >= (z - 1.0) * (z - 1.0) / (2.0 * m * m));
    }
    for (int k = 1; k < 400; ++k) {
        const double z = 0.02 * k;
        const double m = std::max(1.0, z);
        CHECK(entropy_phi(z) >= (z - 1.0) * (z - 1.0) / (2.0 * m * m) - 1e-15);
    }
    CHECK(code_of([] { entropy_phi(0.0); }) == ErrorCode::NonPositiveArgument);
    CHECK(code_of([] { entropy_phi(-2.0); }) == ErrorCode::NonPositiveArgument);
}

TEST_CASE("energy of trivial perturbations") {
    const PhysParams p = flat();
    const Grid1D g(200.0, 2000);
    const ProfileState prof = build_profile(g, p, ProfileParams{});
    FluidState s = initialize_state(g, prof, PerturbSpec{}, p);
    const EnergyRecord zero = energy_and_dissipation(extract_perturbation(s, prof), s, prof, p, g);
    CHECK(zero.E == 0.0);
    CHECK(zero.E_local == 0.0);
    CHECK(zero.D == 0.0);
    CHECK(zero.N == 0.0);

    const double c = 0.1;
    for (std::size_t i = 1; i < g.nodes(); ++i) s.u[i] += c;
    const EnergyRecord kinetic = energy_and_dissipation(extract_perturbation(s, prof), s, prof, p, g);
    CHECK(kinetic.E == doctest::Approx(c * c * g.length() / 2.0).epsilon(1e-3));
    CHECK(kinetic.D >= 0.0);
}

TEST_CASE("decay record of a flat profile is zero") {
    const PhysParams p = flat(2.0);
    const Grid1D g(50.0, 500);
    const ProfileState prof = build_profile(g, p, ProfileParams{});
    const DecayRecord r = profile_decay_record(prof, Field(g, 2.0), g);
    // ln 2 is not exact, so differences of it leave round-off.
    for (double v : {r.ln_x_sq, r.ln_xx_sq, r.ln_xxx_sq, r.bdry_ln_x_sq, r.bdry_ln_xx_sq}) {
        CHECK(v <= 1e-24);
    }
    CHECK(r.theta_x_sq == 0.0);
    CHECK(r.theta_minus_theta2_sq == 0.0);
}

TEST_CASE("ln_x_sq agrees with the analytic derivative oracle") {
    const PhysParams p = defaults();
    const ProfileParams prof{};
    const Grid1D g(10.0, 100000);
    const ProfileState st = build_profile(g, p, prof);
    const DecayRecord r = profile_decay_record(st, st.theta, g);
    const double oracle = simpson(
        [&](double x) {
            const double q = theta0_dx(x, p, prof) / theta0_eval(x, p, prof);
            return q * q;
        },
        0.0, 10.0, 400000);
    CHECK(std::abs(r.ln_x_sq - oracle) <= 1e-8);
    CHECK(r.theta_minus_theta2_sq == 0.0);
}

TEST_CASE("slope energy scales with alpha delta0") {
    const PhysParams p = defaults();
    std::vector<double> ratios;
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
        const ProfileParams prof{alpha, 0.5, {}};
        const Grid1D g(400.0, 40000);
        const DecayRecord r = profile_decay_record(build_profile(g, p, prof), Field(g), g);
        ratios.push_back(r.theta_x_sq / (alpha * 0.5));
    }
    for (double q : ratios) {
        CHECK(std::isfinite(q));
        CHECK(q > 0.0);
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    CHECK(*hi / *lo <= 10.0);
}

TEST_CASE("power-law fitter") {
    const auto a = power_series(1.0, -0.5, 1.0, 100.0, 50);
    const DecayFit fa = fit_power_law(a, 1.0, 100.0);
    CHECK(std::abs(fa.exponent + 0.5) <= 1e-6);
    CHECK(fa.samples == 50);
    CHECK(fa.goodness == doctest::Approx(1.0));

    const auto b = power_series(3.0, -1.5, 1.0, 100.0, 50);
    const DecayFit fb = fit_power_law(b, 1.0, 100.0);
    CHECK(std::abs(fb.exponent + 1.5) <= 1e-6);
    CHECK(std::abs(fb.amplitude - 3.0) <= 1e-6);

    const auto c = power_series(2.0, 0.0, 1.0, 100.0, 20);
    const DecayFit fc = fit_power_law(c, 1.0, 100.0);
    CHECK(std::abs(fc.exponent) <= 1e-12);
    CHECK(fc.goodness == 1.0);

    const DecayFit window = fit_power_law(a, 10.0, 40.0);
    CHECK(window.t0 == 10.0);
    CHECK(window.t1 == 40.0);
    CHECK(window.samples < 50);

    CHECK(code_of([&] { fit_power_law(a, 99.0, 100.0); }) == ErrorCode::InsufficientSamples);
    CHECK(code_of([&] { fit_power_law(a, 0.5, 100.0); }) == ErrorCode::InvalidValue);
    CHECK(code_of([&] { fit_power_law(a, 50.0, 20.0); }) == ErrorCode::InvalidValue);
    auto bad = a;
    bad[10].value = 0.0;
    CHECK(code_of([&] { fit_power_law(bad, 1.0, 100.0); }) == ErrorCode::NonPositiveValue);
}

TEST_CASE("Poincare ratio edge cases") {
    const Grid1D g(50.0, 500);
    const PhysParams p = defaults();
    const ProfileState prof = build_profile(g, p, ProfileParams{});
    Perturbation d{Field(g), Field(g, 0.3), Field(g)};
    CHECK_FALSE(poincare_ratio(d, prof, g).has_value());

    const PhysParams q = flat();
    const ProfileState level = build_profile(g, q, ProfileParams{});
    const PerturbSpec bump{1.0, 0.0, 1.0, 5.0, 0.0};
    for (std::size_t i = 0; i < g.nodes(); ++i) d.phi[i] = d.zeta[i] = bump.bump(g.x(i));
    const auto ratio = poincare_ratio(d, level, g);
    REQUIRE(ratio.has_value());
    CHECK(*ratio == 0.0);
    const auto sloped = poincare_ratio(d, prof, g);
    REQUIRE(sloped.has_value());
    CHECK(*sloped > 0.0);
}

TEST_CASE("oscillation") {
    CHECK(oscillation(Field(10, 4.2)) == 0.0);
    CHECK(oscillation(Field(std::vector<double>{1.0, -2.0, 0.5})) == 3.0);
    const PhysParams p = defaults();
    const Grid1D g(400.0, 4000);
    CHECK(oscillation(build_profile(g, p, ProfileParams{}).theta) >= 1.9);
}

TEST_CASE("sup interpolation ratio of an exponential is one") {
    const Grid1D g(60.0, 60000);
    const Field e = sample(g, [](double x) { return std::exp(-x); });
    CHECK(sup_interpolation_ratio(e, g) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(sup_interpolation_ratio(Field(g), g) == 0.0);
    const PerturbSpec bump{1.0, 0.0, 0.0, 3.0, 0.0};
    CHECK(sup_interpolation_ratio(sample(g, [&](double x) { return bump.bump(x); }), g) <= 1.0);
}

TEST_CASE("kappa study basics") {
    const Grid1D g(20.0, 400);
    KappaStudy study;
    study.kappas = {0.5, 0.5};
    study.horizon = 2.0;
    const auto same = kappa_limit_study(study, defaults(), ProfileParams{}, g);
    REQUIRE(same.size() == 2);
    CHECK(same[0].theta_l1 == same[1].theta_l1);
    CHECK(same[0].u_lp == same[1].u_lp);
    CHECK(same[0].alpha == doctest::Approx(4.0));
    CHECK(same[0].a == doctest::Approx(0.2));

    study.kappas = {1.0, 0.5};
    const auto level = kappa_limit_study(study, flat(), ProfileParams{}, g);
    for (const auto& row : level) {
        CHECK(row.theta_l1 == 0.0);
        CHECK(row.theta_l2 == 0.0);
        CHECK(row.v_l1 <= 1e-15);
        for (double u : row.u_lp) CHECK(u == 0.0);
    }

    study.horizon = 19.0;
    CHECK(code_of([&] { kappa_limit_study(study, defaults(), ProfileParams{}, g); }) ==
          ErrorCode::LayerContainmentViolated);
}

TEST_CASE("initial profile battery") {
    const PhysParams p = defaults();
    const Grid1D g(400.0, 4000);
    const Theta0Report rep = theta0_checks(p, ProfileParams{}, g);
    CHECK(std::abs(rep.slope_l1 - 2.0) <= 1e-8);
    CHECK(rep.slope_l1_grid <= 2.0);
    CHECK(rep.slope_l1_grid >= 1.99);
    CHECK(rep.min_signed_slope > 0.0);
    CHECK(rep.sweep.size() == 6);
    for (const Check& c : rep.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    // For delta0 = 1 the tail is jump e^{-alpha x}, with integral jump / alpha.
    const Theta0Report exp_rep = theta0_checks(p, ProfileParams{2.0, 1.0, {}}, g);
    CHECK(exp_rep.tail_l1 == doctest::Approx(1.0).epsilon(1e-8));
}
