#pragma once
/**
 * @file types.hpp
 * @brief Core value types shared by every module: complex scalars, map
 *        selection, companion-form state, orbit records, and the error
 *        hierarchy.
 */

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace holomap {

using Complex = std::complex<double>;

/// Divisor modulus below this triggers a forbidden-set hit.
inline constexpr double kForbiddenThreshold = 1e-12;
/// Iterate modulus above this (or any non-finite component) is overflow.
inline constexpr double kOverflowThreshold = 1e12;

enum class MapKind { E1, E8, E9 };

const char* map_kind_name(MapKind k);
MapKind map_kind_from_name(const std::string& name);

/// One of the three second-order rational maps together with its parameters.
struct MapSpec {
    MapKind kind = MapKind::E1;
    Complex alpha;
    Complex beta;
};

/// Companion-form state (z_{n-1}, z_n).
struct State {
    Complex z_prev;
    Complex z_curr;
};

struct OrbitStatus {
    enum class Kind { Completed, ForbiddenHit, Overflow };
    Kind kind = Kind::Completed;
    /// 1-based index of the terminating step; 0 when Completed.
    std::size_t step = 0;
};

/// Generated iterates only: points[0] is z_1 (the first computed value).
/// The seed pair is kept in `initial` so exporters can echo it without the
/// points list ever containing non-generated values.
struct Orbit {
    MapSpec spec;
    State initial;
    std::vector<Complex> points;
    OrbitStatus status;
};

// ---------------------------------------------------------------------------
// Error hierarchy. Every library failure derives from Error so callers can
// catch one base type; subclasses exist where tests or the CLI need to
// distinguish causes.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters violate a closed-form precondition (e.g. alpha+beta = 0 for a
/// characteristic polynomial, alpha = beta for the 2-cycle formula).
struct DegenerateParameters : Error {
    using Error::Error;
};

/// An input sequence is too short for the requested analysis window.
struct InsufficientLength : Error {
    using Error::Error;
};

/// A coefficient-chain hypothesis fails; `index` is the first 0-based
/// position k where |c[k]| < a*|c[k+1]|.
struct ChainViolation : Error {
    std::size_t index;
    ChainViolation(const std::string& msg, std::size_t idx)
        : Error(msg), index(idx) {}
};

/// An orbit hit a guard (forbidden divisor or overflow) inside a computation
/// that requires the full trajectory.
struct OrbitTerminated : Error {
    OrbitStatus status;
    OrbitTerminated(const std::string& msg, OrbitStatus st)
        : Error(msg), status(st) {}
};

/// A point cloud collapses onto a horizontal or vertical line, so square
/// box-counting cells cannot be formed.
struct DegenerateExtent : Error {
    using Error::Error;
};

/// A requested grid exceeds the hard cell cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Malformed argument values (bad names, empty inputs, out-of-range knobs).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Filesystem or parse failure in the I/O layer.
struct IoError : Error {
    using Error::Error;
};

}  // namespace holomap
