// The verdict cascade on published survey cases with independently
// recomputed outcomes, plus sweep raster semantics.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holomap/classify.hpp"

#include <cmath>
#include <string>

using namespace holomap;

TEST_CASE("verdict codes are frozen") {
    CHECK(int(Verdict::Convergent) == 0);
    CHECK(int(Verdict::PeriodicConvergent) == 1);
    CHECK(int(Verdict::Unbounded) == 2);
    CHECK(int(Verdict::ForbiddenHit) == 3);
    CHECK(int(Verdict::Chaotic) == 4);
    CHECK(int(Verdict::Undetermined) == 5);
    CHECK(std::string(verdict_name(Verdict::PeriodicConvergent)) == "periodic_convergent");
}

TEST_CASE("convergent: published survey cell with fixed point alpha+beta") {
    const ClassificationReport r =
        classify_orbit({MapKind::E8, Complex(30, 47), Complex(30, -10)},
                       {Complex(9, -41), Complex(49, -63)});
    CHECK(r.verdict == Verdict::Convergent);
    CHECK(std::abs(r.limit - Complex(60, 37)) < 1e-6);
    CHECK(r.iterates == 10000);
    CHECK(r.final_deviation < 1e-6 * (1 + std::abs(r.limit)));
}

TEST_CASE("periodic: published survey cell converging to the closed-form 2-cycle") {
    const MapSpec spec{MapKind::E1, Complex(56, -22), Complex(-52, -19)};
    const ClassificationReport r = classify_orbit(spec, {Complex(-81, -74), Complex(89, 92)});
    CHECK(r.verdict == Verdict::PeriodicConvergent);
    REQUIRE(r.period == 2);
    REQUIRE(r.cycle_points.size() == 2);
    const Complex p = std::sqrt(spec.beta - spec.alpha);
    bool plus = false, minus = false;
    for (const Complex z : r.cycle_points) {
        if (std::abs(z - p) < 1e-6) plus = true;
        if (std::abs(z + p) < 1e-6) minus = true;
    }
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("unbounded: published survey cell that overflows") {
    const ClassificationReport r =
        classify_orbit({MapKind::E9, Complex(30, 47), Complex(30, -10)},
                       {Complex(9, -41), Complex(49, -63)});
    CHECK(r.verdict == Verdict::Unbounded);
    CHECK(r.guard_step == 86);
}

TEST_CASE("forbidden hit is reported with its step") {
    const ClassificationReport r =
        classify_orbit({MapKind::E1, Complex(1), Complex(-1)}, {Complex(1), Complex(1)});
    CHECK(r.verdict == Verdict::ForbiddenHit);
    CHECK(r.guard_step == 2);
}

TEST_CASE("chaotic: published survey cell with positive exponent") {
    const ClassificationReport r =
        classify_orbit({MapKind::E1, Complex(30, 47), Complex(30, -10)},
                       {Complex(9, -41), Complex(49, -63)});
    CHECK(r.verdict == Verdict::Chaotic);
    REQUIRE(r.lambda_max.has_value());
    CHECK(*r.lambda_max > 0.05);
}

TEST_CASE("undetermined: bounded aperiodic orbit below the chaos threshold") {
    // Raising the threshold turns the chaotic case into undetermined,
    // exercising the final branch of the cascade.
    ClassifyOptions opts;
    opts.chaos_threshold = 100.0;
    const ClassificationReport r =
        classify_orbit({MapKind::E1, Complex(30, 47), Complex(30, -10)},
                       {Complex(9, -41), Complex(49, -63)}, opts);
    CHECK(r.verdict == Verdict::Undetermined);
    REQUIRE(r.lambda_max.has_value());
    CHECK(*r.lambda_max > 0.05);
}

TEST_CASE("budget below the floor is rejected") {
    CHECK_THROWS_AS(classify_orbit({MapKind::E1, Complex(1), Complex(1)},
                                   {Complex(1), Complex(1)}, ClassifyOptions{.budget = 1999}),
                    InvalidArgument);
}

TEST_CASE("sweep cells equal direct classification") {
    SweepGrid grid;
    grid.base_spec = {MapKind::E8, Complex(30, 47), Complex(30, -10)};
    grid.base_state = {Complex(9, -41), Complex(49, -63)};
    grid.axes = {{SweepParam::Z0Re, -20, 20, 5}};
    ClassifyOptions opts = sweep_default_options();
    opts.budget = 2000;
    opts.lyap_steps = 2000;
    const SweepGrid out = sweep(grid, opts);
    REQUIRE(out.raster.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        MapSpec spec = grid.base_spec;
        State st = grid.base_state;
        st.z_prev = Complex(grid.axes[0].value(i), st.z_prev.imag());
        const ClassificationReport direct = classify_orbit(spec, st, opts);
        CHECK(out.raster[i] == std::uint8_t(direct.verdict));
    }
}

TEST_CASE("two-axis sweep is row-major with the first axis slowest") {
    SweepGrid grid;
    grid.base_spec = {MapKind::E8, Complex(1), Complex(1)};
    grid.base_state = {Complex(2), Complex(3)};
    grid.axes = {{SweepParam::Z0Re, 1, 2, 3}, {SweepParam::Z1Re, 1, 4, 4}};
    ClassifyOptions opts = sweep_default_options();
    opts.budget = 2000;
    opts.lyap_steps = 2000;
    const SweepGrid out = sweep(grid, opts);
    REQUIRE(out.raster.size() == 12);
    // Cell (i0=2, i1=3) lives at index 2*4+3.
    MapSpec spec = grid.base_spec;
    State st = grid.base_state;
    st.z_prev = Complex(grid.axes[0].value(2), 0);
    st.z_curr = Complex(grid.axes[1].value(3), 0);
    const ClassificationReport direct = classify_orbit(spec, st, opts);
    CHECK(out.raster[2 * 4 + 3] == std::uint8_t(direct.verdict));
    // All cells here converge to alpha+beta = 2.
    for (const std::uint8_t code : out.raster) CHECK(code == 0);
}

TEST_CASE("sweep covers parameter axes and forbidden cells") {
    SweepGrid grid;
    grid.base_spec = {MapKind::E1, Complex(3), Complex(1)};
    grid.base_state = {Complex(1), Complex(0)};  // z1 = 0 hits the divisor guard
    grid.axes = {{SweepParam::Z1Re, 0, 2, 3}};
    ClassifyOptions opts = sweep_default_options();
    opts.budget = 2000;
    opts.lyap_steps = 2000;
    const SweepGrid out = sweep(grid, opts);
    REQUIRE(out.raster.size() == 3);
    CHECK(out.raster[0] == std::uint8_t(Verdict::ForbiddenHit));
    CHECK(out.raster[1] == std::uint8_t(Verdict::Convergent));  // converges to +/-2
    CHECK(out.raster[2] == std::uint8_t(Verdict::Convergent));

    // Parameter axis: vary alpha's real part.
    SweepGrid pg;
    pg.base_spec = {MapKind::E8, Complex(0), Complex(1)};
    pg.base_state = {Complex(2), Complex(3)};
    pg.axes = {{SweepParam::AlphaRe, 1, 3, 3}};
    const SweepGrid pout = sweep(pg, opts);
    REQUIRE(pout.raster.size() == 3);
    for (const std::uint8_t code : pout.raster) CHECK(code == 0);
}

TEST_CASE("sweep validation and cap") {
    SweepGrid grid;
    grid.base_spec = {MapKind::E1, Complex(1), Complex(1)};
    grid.base_state = {Complex(1), Complex(1)};

    grid.axes = {};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);

    grid.axes = {{SweepParam::Z0Re, 0, 1, 2},
                 {SweepParam::Z1Re, 0, 1, 2},
                 {SweepParam::Z0Im, 0, 1, 2}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);

    grid.axes = {{SweepParam::Z0Re, 0, 1, 0}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);

    // Cap check happens before any work.
    grid.axes = {{SweepParam::Z0Re, 0, 1, 1001}, {SweepParam::Z1Re, 0, 1, 1000}};
    CHECK_THROWS_AS(sweep(grid), CapExceeded);
}

TEST_CASE("single-sample axis sits at min") {
    const SweepAxis axis{SweepParam::BetaIm, 2.5, 9.0, 1};
    CHECK(axis.value(0) == 2.5);
}

TEST_CASE("sweep serial twin produces the identical raster") {
    SweepGrid grid;
    grid.base_spec = {MapKind::E1, Complex(56, -22), Complex(-52, -19)};
    grid.base_state = {Complex(-1), Complex(1)};
    grid.axes = {{SweepParam::Z0Re, -2, 2, 7}, {SweepParam::Z0Im, -2, 2, 7}};
    ClassifyOptions opts = sweep_default_options();
    opts.budget = 2000;
    opts.lyap_steps = 2000;
    const SweepGrid par = sweep(grid, opts, 1);
    const SweepGrid ser = sweep_serial(grid, opts, 99);  // seed must not matter
    CHECK(par.raster == ser.raster);
}

TEST_CASE("sweep param names round-trip") {
    for (const SweepParam p :
         {SweepParam::Z0Re, SweepParam::Z0Im, SweepParam::Z1Re, SweepParam::Z1Im,
          SweepParam::AlphaRe, SweepParam::AlphaIm, SweepParam::BetaRe, SweepParam::BetaIm})
        CHECK(sweep_param_from_name(sweep_param_name(p)) == p);
    CHECK_THROWS_AS(sweep_param_from_name("gamma"), InvalidArgument);
}
