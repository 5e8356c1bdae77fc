#pragma once
/**
 * @file maps.hpp
 * @brief The three parameterized maps: guarded single steps, analytic
 *        companion-form Jacobians, orbit generation, and the scaling
 *        transform satisfied by the first map family.
 *
 * Update rules, written for the companion state (z_prev, z_curr):
 *   E1: f = alpha / z_curr + beta / z_prev
 *   E8: f = alpha + beta * z_curr / z_prev
 *   E9: f = alpha * z_prev / z_curr + beta
 */

#include "holomap/types.hpp"

namespace holomap {

/// Which divisor of a step fell below the forbidden threshold.
enum class Divisor { None, ZPrev, ZCurr };

/// Value of the next iterate, or the divisor that made it undefined.
struct StepOutcome {
    Complex value{};
    Divisor forbidden = Divisor::None;
    bool ok() const { return forbidden == Divisor::None; }
};

StepOutcome step(const MapSpec& spec, const State& s);

/// Row-major 2x2 complex matrix.
struct Mat2 {
    Complex m00, m01, m10, m11;

    Complex trace() const { return m00 + m11; }
    Complex det() const { return m00 * m11 - m01 * m10; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
};

/// Companion Jacobian of (z_prev, z_curr) -> (z_curr, f). Top row is always
/// (0, 1); the bottom row holds (df/dz_prev, df/dz_curr).
struct JacobianOutcome {
    Mat2 value{};
    Divisor forbidden = Divisor::None;
    bool ok() const { return forbidden == Divisor::None; }
};

JacobianOutcome jacobian(const MapSpec& spec, const State& s);

/// Generates up to n iterates from the seed pair, stopping at the first
/// guard. A forbidden step stores nothing; an overflowing value is stored
/// before the orbit is cut (its index is the terminating step).
Orbit iterate(const MapSpec& spec, const State& initial, std::size_t n);

/// E1-only covariance: orbits of `spec` started from `apply(s)` equal c
/// times the original orbit pointwise.
struct ScalingTransform {
    MapSpec spec;  ///< parameters scaled by c^2
    Complex c;
    State apply(const State& s) const { return {c * s.z_prev, c * s.z_curr}; }
};

/// Preconditions: kind == E1 and c != 0 (InvalidArgument otherwise).
ScalingTransform transform_orbit_scaling(const MapSpec& spec, Complex c);

}  // namespace holomap
