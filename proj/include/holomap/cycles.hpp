#pragma once
/**
 * @file cycles.hpp
 * @brief Periodic solutions: the cyclic residual system with its analytic
 *        Jacobian, deterministic damped-Newton multistart search (parallel
 *        and serial variants), the closed-form 2-cycle of the first map,
 *        cycle stability via monodromy multipliers, and period detection on
 *        computed orbits.
 */

#include "holomap/stability.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace holomap {

/// Search target: period-d orbits of one map.
struct CycleSystem {
    MapSpec spec;
    std::size_t d = 1;
};

enum class CycleStabilityClass { Attracting, Repelling, SaddleLike, NonHyperbolic };

const char* cycle_stability_name(CycleStabilityClass c);

/// A periodic solution in canonical form: the point list is rotated to the
/// lexicographically smallest sequence (componentwise re, then im).
struct Cycle {
    MapSpec spec;
    std::size_t period = 0;
    std::vector<Complex> points;
    /// Max-norm residual of the cyclic system at the returned points.
    double residual = 0;
    /// Monodromy multiplier moduli, descending.
    std::array<double, 2> multiplier_moduli{};
    CycleStabilityClass stability = CycleStabilityClass::NonHyperbolic;
};

/// Residual r[n] = z[n] - f(z[(n-2) mod d], z[(n-1) mod d]) and its dense
/// d x d complex Jacobian (row-major). Contributions accumulate because the
/// two argument indices coincide for d <= 2.
struct CycleResidual {
    std::vector<Complex> r;
    std::vector<Complex> jac;
    bool forbidden = false;
    std::size_t forbidden_equation = 0;
};

CycleResidual cycle_residual(const CycleSystem& sys, const std::vector<Complex>& z);

inline constexpr double kNewtonAcceptTol = 1e-10;
inline constexpr double kCycleDedupTol = 1e-6;
inline constexpr int kNewtonMaxIters = 200;

/// Multistart damped Newton over `starts` random initial point lists drawn
/// from one seeded generator. The result is independent of thread count and
/// schedule: starts are drawn serially up front, attempts write to slots
/// indexed by attempt, and deduplication runs in attempt order. Solutions
/// whose minimal period properly divides d (including equilibria for d > 1)
/// are excluded; survivors are deduplicated up to cyclic rotation, rotated
/// to canonical form, stability-classified, and sorted by first point.
std::vector<Cycle> find_cycles(const CycleSystem& sys, std::size_t starts, std::uint64_t seed);

/// Serial reference implementation; bit-identical output to find_cycles.
std::vector<Cycle> find_cycles_serial(const CycleSystem& sys, std::size_t starts,
                                      std::uint64_t seed);

/// Closed-form 2-cycle of the first map: {p, -p} with p = sqrt(beta-alpha).
/// Throws DegenerateParameters when alpha = beta (no 2-cycle exists) and
/// InvalidArgument for other map kinds. The result is residual-checked.
std::vector<Cycle> two_cycle_closed_form(const MapSpec& spec);

/// Fills multiplier moduli and the stability class from the eigenvalues of
/// the ordered product of companion Jacobians around the cycle.
Cycle cycle_stability(Cycle c);

/// Published closed-form route for the 2-cycle stability matrix of the
/// first map; kept as an independent cross-check against the numeric
/// monodromy. Throws DegenerateParameters when alpha = beta.
Mat2 published_two_cycle_matrix(const MapSpec& spec);
RootPair published_two_cycle_eigenvalues(const MapSpec& spec);

struct DetectOptions {
    std::size_t p_max = 64;
    std::size_t window = 200;
    /// Absolute comparison tolerance; when unset, 1e-6 * (1 + median
    /// trailing modulus) is used.
    std::optional<double> tol;
};

struct PeriodDetection {
    std::optional<std::size_t> detected_period;
    /// Last detected_period points of the orbit (empty when none).
    std::vector<Complex> limit_cycle;
    /// Max pairwise deviation for the detected period, or the best
    /// candidate's deviation when detection failed.
    double max_deviation = 0;
    /// Tolerance actually used.
    double tol = 0;
};

/// Scans the orbit tail for the smallest p such that every compared pair
/// over the trailing window agrees within tolerance. Requires a Completed
/// orbit of length >= 2*(window + p_max) so the scan stays inside the
/// second half (InsufficientLength / InvalidArgument otherwise).
PeriodDetection detect_period(const Orbit& orbit, const DetectOptions& opts = {});

}  // namespace holomap
