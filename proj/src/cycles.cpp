/**
 * @file cycles.cpp
 * @brief Cyclic residual system, damped-Newton multistart (OpenMP and serial
 *        twins with identical output), closed-form 2-cycles, monodromy
 *        stability, and orbit period detection.
 */

#include "holomap/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace holomap {

const char* cycle_stability_name(CycleStabilityClass c) {
    switch (c) {
        case CycleStabilityClass::Attracting: return "attracting";
        case CycleStabilityClass::Repelling: return "repelling";
        case CycleStabilityClass::SaddleLike: return "saddle_like";
        case CycleStabilityClass::NonHyperbolic: return "non_hyperbolic";
    }
    return "?";
}

CycleResidual cycle_residual(const CycleSystem& sys, const std::vector<Complex>& z) {
    const std::size_t d = sys.d;
    if (d == 0 || z.size() != d)
        throw InvalidArgument("cycle candidate length must equal the period");
    CycleResidual out;
    out.r.assign(d, Complex(0));
    out.jac.assign(d * d, Complex(0));
    for (std::size_t n = 0; n < d; ++n) {
        const std::size_t ip = (n + d - 2) % d;  // index of z_{n-2}
        const std::size_t ic = (n + d - 1) % d;  // index of z_{n-1}
        const State s{z[ip], z[ic]};
        const StepOutcome o = step(sys.spec, s);
        if (!o.ok()) {
            out.forbidden = true;
            out.forbidden_equation = n;
            return out;
        }
        const JacobianOutcome j = jacobian(sys.spec, s);
        out.r[n] = z[n] - o.value;
        // Accumulate: for d <= 2 the argument indices coincide with n or
        // with each other, so contributions must add, not overwrite.
        out.jac[n * d + n] += Complex(1);
        out.jac[n * d + ip] -= j.value.m10;
        out.jac[n * d + ic] -= j.value.m11;
    }
    return out;
}

namespace {

double max_abs(const std::vector<Complex>& v) {
    double m = 0;
    for (const Complex& x : v) m = std::max(m, std::abs(x));
    return m;
}

/// Dense complex LU solve with partial pivoting; false when singular.
bool lu_solve(std::vector<Complex> a, std::vector<Complex> b, std::size_t d,
              std::vector<Complex>& x) {
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        double best = std::abs(a[col * d + col]);
        for (std::size_t r = col + 1; r < d; ++r) {
            const double m = std::abs(a[r * d + col]);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best < 1e-300) return false;
        if (piv != col) {
            for (std::size_t c = 0; c < d; ++c) std::swap(a[col * d + c], a[piv * d + c]);
            std::swap(b[col], b[piv]);
        }
        const Complex inv = Complex(1) / a[col * d + col];
        for (std::size_t r = col + 1; r < d; ++r) {
            const Complex f = a[r * d + col] * inv;
            if (f == Complex(0)) continue;
            for (std::size_t c = col; c < d; ++c) a[r * d + c] -= f * a[col * d + c];
            b[r] -= f * b[col];
        }
    }
    x.assign(d, Complex(0));
    for (std::size_t ri = d; ri-- > 0;) {
        Complex acc = b[ri];
        for (std::size_t c = ri + 1; c < d; ++c) acc -= a[ri * d + c] * x[c];
        x[ri] = acc / a[ri * d + ri];
    }
    return true;
}

double residual_norm_only(const CycleSystem& sys, const std::vector<Complex>& z,
                          bool& forbidden) {
    const std::size_t d = sys.d;
    double m = 0;
    forbidden = false;
    for (std::size_t n = 0; n < d; ++n) {
        const State s{z[(n + d - 2) % d], z[(n + d - 1) % d]};
        const StepOutcome o = step(sys.spec, s);
        if (!o.ok()) {
            forbidden = true;
            return std::numeric_limits<double>::infinity();
        }
        m = std::max(m, std::abs(z[n] - o.value));
    }
    return m;
}

/// One damped-Newton run; true with `z` holding an accepted solution.
bool newton_attempt(const CycleSystem& sys, std::vector<Complex> z,
                    std::vector<Complex>& solution) {
    const std::size_t d = sys.d;
    for (int it = 0; it < kNewtonMaxIters; ++it) {
        const CycleResidual res = cycle_residual(sys, z);
        if (res.forbidden) return false;
        const double rnorm = max_abs(res.r);
        if (rnorm < kNewtonAcceptTol) {
            solution = z;
            return true;
        }
        std::vector<Complex> delta;
        if (!lu_solve(res.jac, res.r, d, delta)) return false;
        // Backtracking line search: halve until the residual strictly
        // improves; a forbidden divisor along the way counts as worse.
        double t = 1.0;
        bool accepted = false;
        for (int h = 0; h < 40; ++h) {
            std::vector<Complex> trial(d);
            for (std::size_t k = 0; k < d; ++k) trial[k] = z[k] - t * delta[k];
            bool forb = false;
            const double tn = residual_norm_only(sys, trial, forb);
            if (!forb && tn < rnorm) {
                z = std::move(trial);
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) return false;
    }
    return false;
}

bool lex_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return a.size() < b.size();
}

std::vector<Complex> canonical_rotation(const std::vector<Complex>& z) {
    const std::size_t d = z.size();
    std::vector<Complex> best = z, cand(d);
    for (std::size_t r = 1; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) cand[k] = z[(k + r) % d];
        if (lex_less(cand, best)) best = cand;
    }
    return best;
}

/// Max pointwise distance between a and b rotated by r.
double rotated_distance(const std::vector<Complex>& a, const std::vector<Complex>& b,
                        std::size_t r) {
    double m = 0;
    const std::size_t d = a.size();
    for (std::size_t k = 0; k < d; ++k) m = std::max(m, std::abs(a[k] - b[(k + r) % d]));
    return m;
}

bool same_cycle(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < a.size(); ++r)
        if (rotated_distance(a, b, r) < kCycleDedupTol) return true;
    return false;
}

/// True when rotating by some proper divisor d' of d moves every point by
/// less than the dedup tolerance, i.e. the minimal period divides d'.
bool minimal_period_divides_properly(const std::vector<Complex>& z) {
    const std::size_t d = z.size();
    for (std::size_t dp = 1; dp < d; ++dp) {
        if (d % dp != 0) continue;
        if (rotated_distance(z, z, dp) < kCycleDedupTol) return true;
    }
    return false;
}

std::vector<std::vector<Complex>> draw_starts(const CycleSystem& sys, std::size_t starts,
                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };
    const double radius =
        2.0 * (1.0 + std::abs(sys.spec.alpha) + std::abs(sys.spec.beta));
    std::vector<std::vector<Complex>> all(starts);
    for (std::size_t a = 0; a < starts; ++a) {
        all[a].resize(sys.d);
        for (std::size_t k = 0; k < sys.d; ++k) {
            // Polar disk sampling: uniform in area, no rejection, exactly
            // two draws per point so the stream layout is fixed.
            const double u1 = uniform01();
            const double u2 = uniform01();
            const double r = radius * std::sqrt(u1);
            const double th = 2.0 * std::numbers::pi * u2;
            all[a][k] = Complex(r * std::cos(th), r * std::sin(th));
        }
    }
    return all;
}

std::vector<Cycle> collect(const CycleSystem& sys,
                           std::vector<std::optional<std::vector<Complex>>>& found) {
    // Attempt-ordered dedup keeps the outcome independent of how attempts
    // were scheduled across threads.
    std::vector<std::vector<Complex>> unique;
    for (auto& slot : found) {
        if (!slot) continue;
        const std::vector<Complex>& z = *slot;
        if (sys.d > 1 && minimal_period_divides_properly(z)) continue;
        bool dup = false;
        for (const auto& u : unique) {
            if (same_cycle(u, z)) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(z);
    }

    std::vector<Cycle> cycles;
    cycles.reserve(unique.size());
    for (auto& z : unique) {
        Cycle c;
        c.spec = sys.spec;
        c.period = sys.d;
        c.points = canonical_rotation(z);
        bool forb = false;
        c.residual = residual_norm_only(sys, c.points, forb);
        cycles.push_back(cycle_stability(std::move(c)));
    }
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.period != b.period) return a.period < b.period;
        return lex_less(a.points, b.points);
    });
    return cycles;
}

std::vector<Cycle> find_cycles_impl(const CycleSystem& sys, std::size_t starts,
                                    std::uint64_t seed, bool parallel) {
    if (sys.d == 0) throw InvalidArgument("cycle period must be >= 1");
    const auto start_points = draw_starts(sys, starts, seed);
    std::vector<std::optional<std::vector<Complex>>> found(starts);

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
        for (long long a = 0; a < static_cast<long long>(starts); ++a) {
            std::vector<Complex> sol;
            if (newton_attempt(sys, start_points[a], sol)) found[a] = std::move(sol);
        }
    } else {
        for (std::size_t a = 0; a < starts; ++a) {
            std::vector<Complex> sol;
            if (newton_attempt(sys, start_points[a], sol)) found[a] = std::move(sol);
        }
    }
    return collect(sys, found);
}

}  // namespace

std::vector<Cycle> find_cycles(const CycleSystem& sys, std::size_t starts,
                               std::uint64_t seed) {
    return find_cycles_impl(sys, starts, seed, true);
}

std::vector<Cycle> find_cycles_serial(const CycleSystem& sys, std::size_t starts,
                                      std::uint64_t seed) {
    return find_cycles_impl(sys, starts, seed, false);
}

std::vector<Cycle> two_cycle_closed_form(const MapSpec& spec) {
    if (spec.kind != MapKind::E1)
        throw InvalidArgument("closed-form 2-cycle applies to map e1 only");
    if (spec.alpha == spec.beta)
        throw DegenerateParameters("no 2-cycle exists when alpha = beta");
    const Complex p = std::sqrt(spec.beta - spec.alpha);
    Cycle c;
    c.spec = spec;
    c.period = 2;
    c.points = canonical_rotation({p, -p});
    const CycleSystem sys{spec, 2};
    bool forb = false;
    c.residual = residual_norm_only(sys, c.points, forb);
    if (forb || c.residual > 1e-10 * (1.0 + std::abs(p)))
        throw DegenerateParameters("closed-form 2-cycle failed its residual check");
    return {cycle_stability(std::move(c))};
}

Cycle cycle_stability(Cycle c) {
    const std::size_t d = c.points.size();
    if (d == 0) throw InvalidArgument("cannot classify an empty cycle");
    Mat2 m{Complex(1), Complex(0), Complex(0), Complex(1)};
    for (std::size_t j = 0; j < d; ++j) {
        const State s{c.points[(j + d - 1) % d], c.points[j]};
        const JacobianOutcome jo = jacobian(c.spec, s);
        if (!jo.ok())
            throw InvalidArgument("cycle passes through the forbidden set");
        m = jo.value * m;  // ordered product J_{d-1} ... J_0
    }
    const RootPair eig = solve_quadratic({-m.trace(), m.det()});
    c.multiplier_moduli = {eig.mod_plus, eig.mod_minus};
    const bool plus_on = std::abs(eig.mod_plus - 1.0) < kNonHyperbolicTol;
    const bool minus_on = std::abs(eig.mod_minus - 1.0) < kNonHyperbolicTol;
    if (plus_on || minus_on) {
        c.stability = CycleStabilityClass::NonHyperbolic;
    } else if (eig.mod_plus < 1.0) {
        c.stability = CycleStabilityClass::Attracting;
    } else if (eig.mod_minus > 1.0) {
        c.stability = CycleStabilityClass::Repelling;
    } else {
        c.stability = CycleStabilityClass::SaddleLike;
    }
    return c;
}

Mat2 published_two_cycle_matrix(const MapSpec& spec) {
    const Complex a = spec.alpha, b = spec.beta;
    if (a == b) throw DegenerateParameters("2-cycle matrix undefined when alpha = beta");
    const Complex d1 = b - a;
    const Complex d2 = (a - b) * (a - b);
    return {a / d1, b / d1, (-a * a + a * b + b * b) / d2, a * b / d2};
}

RootPair published_two_cycle_eigenvalues(const MapSpec& spec) {
    const Mat2 m = published_two_cycle_matrix(spec);
    return solve_quadratic({-m.trace(), m.det()});
}

PeriodDetection detect_period(const Orbit& orbit, const DetectOptions& opts) {
    if (orbit.status.kind != OrbitStatus::Kind::Completed)
        throw InvalidArgument("period detection requires a completed orbit");
    if (opts.p_max == 0 || opts.window == 0)
        throw InvalidArgument("period detection needs positive p_max and window");
    const std::vector<Complex>& pts = orbit.points;
    const std::size_t need = 2 * (opts.window + opts.p_max);
    if (pts.size() < need)
        throw InsufficientLength("orbit too short for period detection: need >= " +
                                 std::to_string(need) + " points, have " +
                                 std::to_string(pts.size()));
    const std::size_t n = pts.size();

    double tol;
    if (opts.tol) {
        tol = *opts.tol;
    } else {
        std::vector<double> mods(opts.window);
        for (std::size_t i = 0; i < opts.window; ++i)
            mods[i] = std::abs(pts[n - opts.window + i]);
        std::sort(mods.begin(), mods.end());
        const std::size_t w = opts.window;
        const double median =
            (w % 2 == 1) ? mods[w / 2] : 0.5 * (mods[w / 2 - 1] + mods[w / 2]);
        tol = 1e-6 * (1.0 + median);
    }

    PeriodDetection det;
    det.tol = tol;
    double best_dev = std::numeric_limits<double>::infinity();
    for (std::size_t p = 1; p <= opts.p_max; ++p) {
        double dev = 0;
        for (std::size_t i = n - p - opts.window; i < n - p; ++i)
            dev = std::max(dev, std::abs(pts[i + p] - pts[i]));
        if (dev < tol) {
            det.detected_period = p;
            det.limit_cycle.assign(pts.end() - p, pts.end());
            det.max_deviation = dev;
            return det;
        }
        best_dev = std::min(best_dev, dev);
    }
    det.max_deviation = best_dev;
    return det;
}

}  // namespace holomap
