#pragma once
/**
 * @file chaos.hpp
 * @brief Chaos and geometry estimators: the largest Lyapunov exponent via
 *        tangent-vector renormalization with the analytic Jacobian, and a
 *        box-counting dimension with a least-squares log-log fit (parallel
 *        and serial variants).
 */

#include "holomap/maps.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace holomap {

struct LyapunovOptions {
    std::size_t transient = 1000;
    std::size_t steps = 100000;
    /// When nonzero, record the running average every `history_stride`
    /// accumulation steps.
    std::size_t history_stride = 0;
};

struct LyapunovEstimate {
    double lambda_max = 0;
    std::size_t steps_used = 0;
    std::size_t transient_skipped = 0;
    std::vector<double> history;
};

/// Benettin-style estimate in natural log. The transient advances the state
/// only; each accumulation step pushes the tangent vector through the
/// Jacobian at the current state, accumulates log of its norm, normalizes,
/// and then advances the state. Throws OrbitTerminated if a guard fires
/// anywhere in transient + steps.
LyapunovEstimate lyapunov_max(const MapSpec& spec, const State& initial,
                              const LyapunovOptions& opts = {});

struct BoxDimEstimate {
    double dimension = 0;
    /// (cell side, occupied cell count) per dyadic scale, finest last.
    std::vector<std::pair<double, std::size_t>> scales;
    double fit_r2 = 0;
};

/// Counts occupied square cells of side diag * 2^-k for k in [k_min, k_max]
/// and fits ln(count) against ln(1/side). Preconditions: >= 1000 points,
/// k_max > k_min >= 2, at least 5 scales. A single repeated point yields
/// dimension 0 with perfect fit; a cloud collapsed onto an axis-parallel
/// line throws DegenerateExtent.
BoxDimEstimate box_dimension(const std::vector<Complex>& points, int k_min = 4,
                             int k_max = 10);

/// Serial reference implementation; identical output to box_dimension.
BoxDimEstimate box_dimension_serial(const std::vector<Complex>& points, int k_min = 4,
                                    int k_max = 10);

}  // namespace holomap
