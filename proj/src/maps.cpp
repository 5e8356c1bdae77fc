/**
 * @file maps.cpp
 * @brief Guarded step/Jacobian evaluation and orbit generation for the three
 *        rational maps.
 */

#include "holomap/maps.hpp"

#include <cmath>

namespace holomap {

const char* map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::E1: return "e1";
        case MapKind::E8: return "e8";
        case MapKind::E9: return "e9";
    }
    return "?";
}

MapKind map_kind_from_name(const std::string& name) {
    if (name == "e1") return MapKind::E1;
    if (name == "e8") return MapKind::E8;
    if (name == "e9") return MapKind::E9;
    throw InvalidArgument("unknown map kind: '" + name + "' (expected e1, e8 or e9)");
}

namespace {

bool forbidden_small(const Complex& z) { return std::abs(z) < kForbiddenThreshold; }

}  // namespace

StepOutcome step(const MapSpec& spec, const State& s) {
    switch (spec.kind) {
        case MapKind::E1:
            if (forbidden_small(s.z_curr)) return {{}, Divisor::ZCurr};
            if (forbidden_small(s.z_prev)) return {{}, Divisor::ZPrev};
            return {spec.alpha / s.z_curr + spec.beta / s.z_prev, Divisor::None};
        case MapKind::E8:
            if (forbidden_small(s.z_prev)) return {{}, Divisor::ZPrev};
            return {spec.alpha + spec.beta * s.z_curr / s.z_prev, Divisor::None};
        case MapKind::E9:
            if (forbidden_small(s.z_curr)) return {{}, Divisor::ZCurr};
            return {spec.alpha * s.z_prev / s.z_curr + spec.beta, Divisor::None};
    }
    return {{}, Divisor::None};
}

JacobianOutcome jacobian(const MapSpec& spec, const State& s) {
    Mat2 m{Complex(0), Complex(1), Complex(0), Complex(0)};
    switch (spec.kind) {
        case MapKind::E1:
            if (forbidden_small(s.z_curr)) return {{}, Divisor::ZCurr};
            if (forbidden_small(s.z_prev)) return {{}, Divisor::ZPrev};
            m.m10 = -spec.beta / (s.z_prev * s.z_prev);
            m.m11 = -spec.alpha / (s.z_curr * s.z_curr);
            return {m, Divisor::None};
        case MapKind::E8:
            if (forbidden_small(s.z_prev)) return {{}, Divisor::ZPrev};
            m.m10 = -spec.beta * s.z_curr / (s.z_prev * s.z_prev);
            m.m11 = spec.beta / s.z_prev;
            return {m, Divisor::None};
        case MapKind::E9:
            if (forbidden_small(s.z_curr)) return {{}, Divisor::ZCurr};
            m.m10 = spec.alpha / s.z_curr;
            m.m11 = -spec.alpha * s.z_prev / (s.z_curr * s.z_curr);
            return {m, Divisor::None};
    }
    return {m, Divisor::None};
}

Orbit iterate(const MapSpec& spec, const State& initial, std::size_t n) {
    Orbit orbit;
    orbit.spec = spec;
    orbit.initial = initial;
    orbit.points.reserve(n);

    State s = initial;
    for (std::size_t i = 1; i <= n; ++i) {
        StepOutcome o = step(spec, s);
        if (!o.ok()) {
            orbit.status = {OrbitStatus::Kind::ForbiddenHit, i};
            return orbit;
        }
        const Complex v = o.value;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            orbit.status = {OrbitStatus::Kind::Overflow, i};
            return orbit;
        }
        orbit.points.push_back(v);
        if (std::abs(v) > kOverflowThreshold) {
            orbit.status = {OrbitStatus::Kind::Overflow, i};
            return orbit;
        }
        s = {s.z_curr, v};
    }
    orbit.status = {OrbitStatus::Kind::Completed, 0};
    return orbit;
}

ScalingTransform transform_orbit_scaling(const MapSpec& spec, Complex c) {
    if (spec.kind != MapKind::E1)
        throw InvalidArgument("scaling covariance holds for map e1 only");
    if (c == Complex(0)) throw InvalidArgument("scaling factor must be nonzero");
    MapSpec scaled = spec;
    scaled.alpha = c * c * spec.alpha;
    scaled.beta = c * c * spec.beta;
    return {scaled, c};
}

}  // namespace holomap
