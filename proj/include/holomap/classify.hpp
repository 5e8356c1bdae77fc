#pragma once
/**
 * @file classify.hpp
 * @brief Orbit classification (a fixed verdict cascade over guards,
 *        convergence, period detection, and the Lyapunov exponent) and
 *        raster sweeps of verdicts over initial conditions or parameters
 *        (parallel and serial variants).
 */

#include "holomap/chaos.hpp"
#include "holomap/cycles.hpp"

#include <cstdint>
#include <optional>

namespace holomap {

/// Verdict codes are stable and are stored verbatim in sweep rasters.
enum class Verdict : std::uint8_t {
    Convergent = 0,
    PeriodicConvergent = 1,
    Unbounded = 2,
    ForbiddenHit = 3,
    Chaotic = 4,
    Undetermined = 5,
};

const char* verdict_name(Verdict v);

struct ClassifyOptions {
    std::size_t budget = 10000;      ///< orbit length examined (>= 2000)
    std::size_t lyap_transient = 1000;
    std::size_t lyap_steps = 10000;
    double chaos_threshold = 0.01;   ///< lambda above this is chaotic
};

struct ClassificationReport {
    Verdict verdict = Verdict::Undetermined;
    MapSpec spec;
    State initial;
    std::size_t iterates = 0;        ///< points actually generated

    Complex limit{};                 ///< Convergent only
    std::size_t period = 0;          ///< PeriodicConvergent only
    std::vector<Complex> cycle_points;
    std::size_t guard_step = 0;      ///< Unbounded / ForbiddenHit only

    // Diagnostics from whichever stages ran.
    double final_deviation = 0;
    std::optional<std::size_t> detected_period;
    std::optional<double> lambda_max;
};

/// Cascade: guards first, then trailing-window convergence to the final
/// value, then period detection (p >= 2), then the Lyapunov test. A guard
/// that fires inside the Lyapunov stage itself yields Undetermined.
ClassificationReport classify_orbit(const MapSpec& spec, const State& initial,
                                    const ClassifyOptions& opts = {});

/// Sweepable scalar components.
enum class SweepParam { Z0Re, Z0Im, Z1Re, Z1Im, AlphaRe, AlphaIm, BetaRe, BetaIm };

const char* sweep_param_name(SweepParam p);
SweepParam sweep_param_from_name(const std::string& name);

struct SweepAxis {
    SweepParam param = SweepParam::Z0Re;
    double min = 0;
    double max = 0;
    std::size_t resolution = 1;

    /// Grid value at index i: linear in [min, max]; a single-sample axis
    /// sits at min.
    double value(std::size_t i) const {
        return resolution <= 1 ? min : min + (max - min) * double(i) / double(resolution - 1);
    }
};

inline constexpr std::size_t kSweepCellCap = 1000000;

struct SweepGrid {
    MapSpec base_spec;
    State base_state;
    std::vector<SweepAxis> axes;        ///< 1 or 2 axes
    /// Row-major verdict codes, first axis slowest; filled by sweep().
    std::vector<std::uint8_t> raster;
};

inline ClassifyOptions sweep_default_options() {
    return ClassifyOptions{.budget = 5000, .lyap_transient = 1000, .lyap_steps = 10000,
                           .chaos_threshold = 0.01};
}

/// Classifies every grid cell. Throws CapExceeded above kSweepCellCap and
/// InvalidArgument for a bad axis count or zero resolution. `seed` is
/// accepted for interface stability; the pipeline is deterministic and the
/// raster does not depend on it.
SweepGrid sweep(SweepGrid grid, const ClassifyOptions& opts = sweep_default_options(),
                std::uint64_t seed = 0);

/// Serial reference implementation; identical raster to sweep().
SweepGrid sweep_serial(SweepGrid grid, const ClassifyOptions& opts = sweep_default_options(),
                       std::uint64_t seed = 0);

}  // namespace holomap
