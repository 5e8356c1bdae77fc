/**
 * @file chaos.cpp
 * @brief Lyapunov exponent via tangent renormalization and box-counting
 *        dimension with OpenMP/serial twins.
 */

#include "holomap/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace holomap {

namespace {

[[noreturn]] void throw_terminated(const char* phase, OrbitStatus::Kind kind,
                                   std::size_t step) {
    throw OrbitTerminated(std::string("orbit terminated during ") + phase + " at step " +
                              std::to_string(step),
                          {kind, step});
}

}  // namespace

LyapunovEstimate lyapunov_max(const MapSpec& spec, const State& initial,
                              const LyapunovOptions& opts) {
    if (opts.steps == 0) throw InvalidArgument("lyapunov needs steps >= 1");
    State s = initial;
    std::size_t global = 0;
    for (std::size_t t = 0; t < opts.transient; ++t) {
        ++global;
        const StepOutcome o = step(spec, s);
        if (!o.ok()) throw_terminated("transient", OrbitStatus::Kind::ForbiddenHit, global);
        const Complex v = o.value;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
            std::abs(v) > kOverflowThreshold)
            throw_terminated("transient", OrbitStatus::Kind::Overflow, global);
        s = {s.z_curr, v};
    }

    // Tangent vector in companion coordinates; pushed through the Jacobian
    // at the current state before that state advances.
    Complex v0(1), v1(0);
    double acc = 0;
    LyapunovEstimate est;
    est.transient_skipped = opts.transient;
    for (std::size_t k = 0; k < opts.steps; ++k) {
        ++global;
        const JacobianOutcome jo = jacobian(spec, s);
        if (!jo.ok()) throw_terminated("accumulation", OrbitStatus::Kind::ForbiddenHit, global);
        const Complex w0 = v1;
        const Complex w1 = jo.value.m10 * v0 + jo.value.m11 * v1;
        const double nrm = std::sqrt(std::norm(w0) + std::norm(w1));
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw InvalidArgument("tangent vector vanished; exponent undefined");
        acc += std::log(nrm);
        v0 = w0 / nrm;
        v1 = w1 / nrm;

        const StepOutcome o = step(spec, s);
        if (!o.ok()) throw_terminated("accumulation", OrbitStatus::Kind::ForbiddenHit, global);
        const Complex z = o.value;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
            std::abs(z) > kOverflowThreshold)
            throw_terminated("accumulation", OrbitStatus::Kind::Overflow, global);
        s = {s.z_curr, z};

        if (opts.history_stride && (k + 1) % opts.history_stride == 0)
            est.history.push_back(acc / double(k + 1));
    }
    est.lambda_max = acc / double(opts.steps);
    est.steps_used = opts.steps;
    return est;
}

namespace {

BoxDimEstimate box_dimension_impl(const std::vector<Complex>& points, int k_min, int k_max,
                                  bool parallel) {
    if (points.size() < 1000)
        throw InvalidArgument("box dimension needs at least 1000 points");
    if (k_min < 2 || k_max <= k_min)
        throw InvalidArgument("box dimension needs k_max > k_min >= 2");
    if (k_max > 30) throw InvalidArgument("box dimension scale exponent too large");
    const int n_scales = k_max - k_min + 1;
    if (n_scales < 5) throw InvalidArgument("box dimension needs at least 5 scales");

    double x0 = points[0].real(), x1 = x0, y0 = points[0].imag(), y1 = y0;
    for (const Complex& p : points) {
        x0 = std::min(x0, p.real());
        x1 = std::max(x1, p.real());
        y0 = std::min(y0, p.imag());
        y1 = std::max(y1, p.imag());
    }
    const double w = x1 - x0, h = y1 - y0;
    const double diag = std::hypot(w, h);

    BoxDimEstimate est;
    if (diag == 0.0) {
        // Single repeated point: every scale sees one box, slope 0.
        for (int k = k_min; k <= k_max; ++k) est.scales.emplace_back(0.0, 1);
        est.dimension = 0.0;
        est.fit_r2 = 1.0;
        return est;
    }
    if (w == 0.0 || h == 0.0)
        throw DegenerateExtent("points collapse onto an axis-parallel line");

    std::vector<std::size_t> counts(n_scales, 0);
    auto count_scale = [&](int idx) {
        const int k = k_min + idx;
        const double side = std::ldexp(diag, -k);
        std::unordered_set<std::uint64_t> cells;
        cells.reserve(points.size() / 4);
        for (const Complex& p : points) {
            const auto cx = static_cast<std::uint64_t>((p.real() - x0) / side);
            const auto cy = static_cast<std::uint64_t>((p.imag() - y0) / side);
            cells.insert((cx << 31) | cy);
        }
        counts[idx] = cells.size();
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int idx = 0; idx < n_scales; ++idx) count_scale(idx);
    } else {
        for (int idx = 0; idx < n_scales; ++idx) count_scale(idx);
    }

    std::vector<double> lx(n_scales), ly(n_scales);
    double xm = 0, ym = 0;
    for (int idx = 0; idx < n_scales; ++idx) {
        const double side = std::ldexp(diag, -(k_min + idx));
        est.scales.emplace_back(side, counts[idx]);
        lx[idx] = std::log(1.0 / side);
        ly[idx] = std::log(double(counts[idx]));
        xm += lx[idx];
        ym += ly[idx];
    }
    xm /= n_scales;
    ym /= n_scales;
    // Centered least squares keeps the normal equations well conditioned.
    double vxx = 0, vxy = 0, vyy = 0;
    for (int idx = 0; idx < n_scales; ++idx) {
        vxx += (lx[idx] - xm) * (lx[idx] - xm);
        vxy += (lx[idx] - xm) * (ly[idx] - ym);
        vyy += (ly[idx] - ym) * (ly[idx] - ym);
    }
    est.dimension = vxy / vxx;
    est.fit_r2 = vyy == 0.0 ? 1.0 : 1.0 - (vyy - vxy * vxy / vxx) / vyy;
    return est;
}

}  // namespace

BoxDimEstimate box_dimension(const std::vector<Complex>& points, int k_min, int k_max) {
    return box_dimension_impl(points, k_min, k_max, true);
}

BoxDimEstimate box_dimension_serial(const std::vector<Complex>& points, int k_min,
                                    int k_max) {
    return box_dimension_impl(points, k_min, k_max, false);
}

}  // namespace holomap
