/**
 * @file classify.cpp
 * @brief Verdict cascade and raster sweeps (OpenMP and serial twins).
 */

#include "holomap/classify.hpp"

#include <cmath>

namespace holomap {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Convergent: return "convergent";
        case Verdict::PeriodicConvergent: return "periodic_convergent";
        case Verdict::Unbounded: return "unbounded";
        case Verdict::ForbiddenHit: return "forbidden_hit";
        case Verdict::Chaotic: return "chaotic";
        case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

ClassificationReport classify_orbit(const MapSpec& spec, const State& initial,
                                    const ClassifyOptions& opts) {
    if (opts.budget < 2000)
        throw InvalidArgument("classification budget must be >= 2000 iterates");
    ClassificationReport rep;
    rep.spec = spec;
    rep.initial = initial;

    const Orbit orbit = iterate(spec, initial, opts.budget);
    rep.iterates = orbit.points.size();
    if (orbit.status.kind == OrbitStatus::Kind::ForbiddenHit) {
        rep.verdict = Verdict::ForbiddenHit;
        rep.guard_step = orbit.status.step;
        return rep;
    }
    if (orbit.status.kind == OrbitStatus::Kind::Overflow) {
        rep.verdict = Verdict::Unbounded;
        rep.guard_step = orbit.status.step;
        return rep;
    }

    // Stage 2: trailing-window convergence to the final iterate.
    const std::vector<Complex>& pts = orbit.points;
    const Complex last = pts.back();
    const std::size_t window = std::min<std::size_t>(200, pts.size());
    double dev = 0;
    for (std::size_t i = pts.size() - window; i < pts.size(); ++i)
        dev = std::max(dev, std::abs(pts[i] - last));
    rep.final_deviation = dev;
    if (dev < 1e-6 * (1.0 + std::abs(last))) {
        rep.verdict = Verdict::Convergent;
        rep.limit = last;
        return rep;
    }

    // Stage 3: period detection; a detected fixed point (p = 1) that failed
    // stage 2 is not trusted and falls through.
    const PeriodDetection det = detect_period(orbit);
    rep.detected_period = det.detected_period;
    if (det.detected_period && *det.detected_period >= 2) {
        rep.verdict = Verdict::PeriodicConvergent;
        rep.period = *det.detected_period;
        rep.cycle_points = det.limit_cycle;
        return rep;
    }

    // Stage 4: Lyapunov test; a guard inside this stage leaves the orbit
    // unclassified rather than inventing a verdict.
    try {
        const LyapunovEstimate est = lyapunov_max(
            spec, initial, {.transient = opts.lyap_transient, .steps = opts.lyap_steps});
        rep.lambda_max = est.lambda_max;
        rep.verdict =
            est.lambda_max > opts.chaos_threshold ? Verdict::Chaotic : Verdict::Undetermined;
    } catch (const OrbitTerminated&) {
        rep.verdict = Verdict::Undetermined;
    } catch (const InvalidArgument&) {
        rep.verdict = Verdict::Undetermined;
    }
    return rep;
}

const char* sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::Z0Re: return "z0re";
        case SweepParam::Z0Im: return "z0im";
        case SweepParam::Z1Re: return "z1re";
        case SweepParam::Z1Im: return "z1im";
        case SweepParam::AlphaRe: return "alre";
        case SweepParam::AlphaIm: return "alim";
        case SweepParam::BetaRe: return "bere";
        case SweepParam::BetaIm: return "beim";
    }
    return "?";
}

SweepParam sweep_param_from_name(const std::string& name) {
    for (const SweepParam p :
         {SweepParam::Z0Re, SweepParam::Z0Im, SweepParam::Z1Re, SweepParam::Z1Im,
          SweepParam::AlphaRe, SweepParam::AlphaIm, SweepParam::BetaRe, SweepParam::BetaIm})
        if (name == sweep_param_name(p)) return p;
    throw InvalidArgument("unknown sweep parameter: '" + name + "'");
}

namespace {

void apply_param(MapSpec& spec, State& st, SweepParam p, double v) {
    auto set_re = [v](Complex& c) { c = Complex(v, c.imag()); };
    auto set_im = [v](Complex& c) { c = Complex(c.real(), v); };
    switch (p) {
        case SweepParam::Z0Re: set_re(st.z_prev); break;
        case SweepParam::Z0Im: set_im(st.z_prev); break;
        case SweepParam::Z1Re: set_re(st.z_curr); break;
        case SweepParam::Z1Im: set_im(st.z_curr); break;
        case SweepParam::AlphaRe: set_re(spec.alpha); break;
        case SweepParam::AlphaIm: set_im(spec.alpha); break;
        case SweepParam::BetaRe: set_re(spec.beta); break;
        case SweepParam::BetaIm: set_im(spec.beta); break;
    }
}

SweepGrid sweep_impl(SweepGrid grid, const ClassifyOptions& opts, bool parallel) {
    if (grid.axes.empty() || grid.axes.size() > 2)
        throw InvalidArgument("sweep supports 1 or 2 axes");
    std::size_t cells = 1;
    for (const SweepAxis& ax : grid.axes) {
        if (ax.resolution == 0) throw InvalidArgument("sweep axis resolution must be >= 1");
        cells *= ax.resolution;
    }
    if (cells > kSweepCellCap)
        throw CapExceeded("sweep grid of " + std::to_string(cells) +
                          " cells exceeds the cap of " + std::to_string(kSweepCellCap));

    grid.raster.assign(cells, 0);
    const std::size_t inner = grid.axes.size() == 2 ? grid.axes[1].resolution : 1;

    auto run_cell = [&](std::size_t flat) {
        MapSpec spec = grid.base_spec;
        State st = grid.base_state;
        const std::size_t i0 = flat / inner;
        apply_param(spec, st, grid.axes[0].param, grid.axes[0].value(i0));
        if (grid.axes.size() == 2) {
            const std::size_t i1 = flat % inner;
            apply_param(spec, st, grid.axes[1].param, grid.axes[1].value(i1));
        }
        grid.raster[flat] = static_cast<std::uint8_t>(classify_orbit(spec, st, opts).verdict);
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (long long flat = 0; flat < static_cast<long long>(cells); ++flat)
            run_cell(flat);
    } else {
        for (std::size_t flat = 0; flat < cells; ++flat) run_cell(flat);
    }
    return grid;
}

}  // namespace

SweepGrid sweep(SweepGrid grid, const ClassifyOptions& opts, std::uint64_t seed) {
    (void)seed;  // accepted for interface stability; the pipeline is deterministic
    return sweep_impl(std::move(grid), opts, true);
}

SweepGrid sweep_serial(SweepGrid grid, const ClassifyOptions& opts, std::uint64_t seed) {
    (void)seed;
    return sweep_impl(std::move(grid), opts, false);
}

}  // namespace holomap
