// Benchmark of the OpenMP kernels against their serial reference twins.
// Each section checks that both paths produce identical results before
// reporting times. HOLOMAP_BENCH_SMOKE=1 shrinks the workload so the same
// binary can run as a fast test.

#include "holomap/classify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

using namespace holomap;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool cycles_equal(const std::vector<Cycle>& a, const std::vector<Cycle>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].period != b[i].period || a[i].points != b[i].points) return false;
    }
    return true;
}

}  // namespace

int main() {
    const bool smoke = std::getenv("HOLOMAP_BENCH_SMOKE") != nullptr;
    int failures = 0;

    {
        const CycleSystem sys{{MapKind::E1, Complex(1), Complex(1)}, 5};
        const std::size_t starts = smoke ? 40 : 400;
        std::vector<Cycle> par, ser;
        const double tp = time_ms([&] { par = find_cycles(sys, starts, 42); });
        const double ts = time_ms([&] { ser = find_cycles_serial(sys, starts, 42); });
        const bool ok = cycles_equal(par, ser);
        if (!ok) ++failures;
        std::printf("find_cycles    starts=%zu found=%zu  parallel %.1f ms  serial %.1f ms  "
                    "speedup %.2fx  identical=%s\n",
                    starts, par.size(), tp, ts, ts / tp, ok ? "yes" : "NO");
    }

    {
        SweepGrid grid;
        grid.base_spec = {MapKind::E1, Complex(1), Complex(1)};
        grid.base_state = {Complex(0.5, 0.5), Complex(0.5, -0.5)};
        const std::size_t res = smoke ? 11 : 41;
        grid.axes = {{SweepParam::Z0Re, -2.0, 2.0, res}, {SweepParam::Z1Re, -2.0, 2.0, res}};
        ClassifyOptions opts = sweep_default_options();
        opts.budget = 2000;
        SweepGrid par, ser;
        const double tp = time_ms([&] { par = sweep(grid, opts); });
        const double ts = time_ms([&] { ser = sweep_serial(grid, opts); });
        const bool ok = par.raster == ser.raster;
        if (!ok) ++failures;
        std::printf("sweep          cells=%zu  parallel %.1f ms  serial %.1f ms  speedup "
                    "%.2fx  identical=%s\n",
                    par.raster.size(), tp, ts, ts / tp, ok ? "yes" : "NO");
    }

    {
        std::mt19937_64 rng(7);
        auto u = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };
        const std::size_t n = smoke ? 100000 : 1000000;
        std::vector<Complex> pts(n);
        for (auto& z : pts) z = Complex(u(), u());
        BoxDimEstimate par, ser;
        const double tp = time_ms([&] { par = box_dimension(pts, 3, 10); });
        const double ts = time_ms([&] { ser = box_dimension_serial(pts, 3, 10); });
        const bool ok = par.dimension == ser.dimension && par.scales == ser.scales;
        if (!ok) ++failures;
        std::printf("box_dimension  points=%zu dim=%.4f  parallel %.1f ms  serial %.1f ms  "
                    "speedup %.2fx  identical=%s\n",
                    n, par.dimension, tp, ts, ts / tp, ok ? "yes" : "NO");
    }

    return failures == 0 ? 0 : 1;
}
