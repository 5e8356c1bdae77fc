// Lyapunov estimation against closed-form linearization rates, and the
// box-counting dimension estimator on sets of known dimension.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holomap/chaos.hpp"
#include "holomap/stability.hpp"

#include <cmath>
#include <random>

using namespace holomap;

namespace {

std::vector<Complex> random_cloud(std::size_t n, std::uint64_t seed,
                                  double slope_y_per_x) {
    // Uniform x in [0,1]; y = slope*x plus uniform [0,1] when slope is 0
    // (filled square) or exactly on the line otherwise.
    std::mt19937_64 rng(seed);
    auto u = [&] { return double(rng() >> 11) * 0x1.0p-53; };
    std::vector<Complex> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = u();
        const double y = slope_y_per_x == 0.0 ? u() : slope_y_per_x * x;
        pts.emplace_back(x, y);
    }
    return pts;
}

}  // namespace

TEST_CASE("lyapunov at an attracting fixed point matches the linearization rate") {
    // Second map at alpha=beta=1: spectral radius sqrt(1/2).
    LyapunovOptions opts;
    opts.steps = 30000;
    const LyapunovEstimate est =
        lyapunov_max({MapKind::E8, Complex(1), Complex(1)}, {Complex(2.1), Complex(1.9)}, opts);
    CHECK(est.steps_used == 30000);
    CHECK(est.transient_skipped == 1000);
    CHECK(std::abs(est.lambda_max - std::log(std::sqrt(0.5))) < 1e-2);

    // First map at alpha=3, beta=1: both multipliers have modulus 1/2.
    const LyapunovEstimate est2 =
        lyapunov_max({MapKind::E1, Complex(3), Complex(1)}, {Complex(2.05), Complex(1.95)}, opts);
    CHECK(std::abs(est2.lambda_max - std::log(0.5)) < 1e-2);
}

TEST_CASE("lyapunov is positive on a published chaotic case and stable in the transient") {
    const MapSpec spec{MapKind::E1, Complex(30, 47), Complex(30, -10)};
    const State init{Complex(9, -41), Complex(49, -63)};
    LyapunovOptions opts;
    opts.steps = 20000;
    const LyapunovEstimate a = lyapunov_max(spec, init, opts);
    CHECK(a.lambda_max > 0.10);
    CHECK(a.lambda_max < 0.25);
    opts.transient = 2000;
    const LyapunovEstimate b = lyapunov_max(spec, init, opts);
    CHECK(std::abs(a.lambda_max - b.lambda_max) < 0.05);
}

TEST_CASE("lyapunov reports orbit termination") {
    // This published case overflows well before the default budget.
    CHECK_THROWS_AS(lyapunov_max({MapKind::E9, Complex(30, 47), Complex(30, -10)},
                                 {Complex(9, -41), Complex(49, -63)}),
                    OrbitTerminated);
    // Immediate forbidden hit.
    CHECK_THROWS_AS(lyapunov_max({MapKind::E1, Complex(1), Complex(-1)},
                                 {Complex(1), Complex(1)}),
                    OrbitTerminated);
}

TEST_CASE("lyapunov history records running averages") {
    LyapunovOptions opts;
    opts.steps = 5000;
    opts.history_stride = 1000;
    const LyapunovEstimate est =
        lyapunov_max({MapKind::E8, Complex(1), Complex(1)}, {Complex(2.1), Complex(1.9)}, opts);
    REQUIRE(est.history.size() == 5);
    CHECK(est.history.back() == est.lambda_max);
}

TEST_CASE("box dimension of a filled square is close to 2") {
    const auto pts = random_cloud(1000000, 5, 0.0);
    const BoxDimEstimate est = box_dimension(pts);
    CHECK(est.dimension > 1.90);
    CHECK(est.dimension < 2.05);
    CHECK(est.fit_r2 > 0.99);
    REQUIRE(est.scales.size() == 7);
    for (std::size_t i = 1; i < est.scales.size(); ++i) {
        CHECK(est.scales[i].first < est.scales[i - 1].first);   // sides shrink
        CHECK(est.scales[i].second >= est.scales[i - 1].second);  // counts grow
    }
}

TEST_CASE("box dimension of a diagonal line is close to 1") {
    const auto pts = random_cloud(200000, 9, 1.0);
    const BoxDimEstimate est = box_dimension(pts, 4, 9);
    CHECK(est.dimension > 0.90);
    CHECK(est.dimension < 1.10);
    CHECK(est.fit_r2 > 0.99);
}

TEST_CASE("box dimension degenerate inputs") {
    // All points identical: zero diagonal, dimension 0, perfect fit.
    const std::vector<Complex> same(2000, Complex(0.3, 0.7));
    const BoxDimEstimate est = box_dimension(same);
    CHECK(est.dimension == 0);
    CHECK(est.fit_r2 == 1.0);
    for (const auto& [side, count] : est.scales) {
        CHECK(side == 0.0);
        CHECK(count == 1);
    }

    // Axis-parallel segment: one extent is zero.
    std::vector<Complex> line;
    for (int i = 0; i < 2000; ++i) line.emplace_back(double(i) / 2000.0, 0.25);
    CHECK_THROWS_AS(box_dimension(line), DegenerateExtent);
}

TEST_CASE("box dimension input validation") {
    const auto pts = random_cloud(2000, 1, 0.0);
    CHECK_THROWS_AS(box_dimension(std::vector<Complex>(999, Complex(1))), InvalidArgument);
    CHECK_THROWS_AS(box_dimension(pts, 1, 10), InvalidArgument);   // k_min < 2
    CHECK_THROWS_AS(box_dimension(pts, 4, 6), InvalidArgument);    // fewer than 5 scales
    CHECK_THROWS_AS(box_dimension(pts, 4, 31), InvalidArgument);   // k_max too fine
}

TEST_CASE("box dimension serial twin is identical") {
    const auto pts = random_cloud(50000, 123, 0.0);
    const BoxDimEstimate par = box_dimension(pts, 3, 8);
    const BoxDimEstimate ser = box_dimension_serial(pts, 3, 8);
    CHECK(par.dimension == ser.dimension);
    CHECK(par.fit_r2 == ser.fit_r2);
    REQUIRE(par.scales.size() == ser.scales.size());
    for (std::size_t i = 0; i < par.scales.size(); ++i) {
        CHECK(par.scales[i].first == ser.scales[i].first);
        CHECK(par.scales[i].second == ser.scales[i].second);
    }
}
