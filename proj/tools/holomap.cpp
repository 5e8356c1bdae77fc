/**
 * @file holomap.cpp
 * @brief Command-line front end. Subcommands map one-to-one onto library
 *        operations; all numeric behavior lives in the library. Exit codes:
 *        0 success, 1 usage error, 2 runtime error.
 */

#include <CLI11.hpp>

#include "holomap/io.hpp"
#include "holomap/svg.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>

namespace {

using namespace holomap;

/// Strict "re,im" parser: exactly one comma, both halves full doubles.
Complex parse_complex(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw InvalidArgument("expected 're,im' but got '" + text + "'");
    auto parse_half = [&text](const std::string& half) {
        char* end = nullptr;
        const double v = std::strtod(half.c_str(), &end);
        if (end == half.c_str() || end != half.c_str() + half.size())
            throw InvalidArgument("expected 're,im' but got '" + text + "'");
        return v;
    };
    return {parse_half(text.substr(0, comma)), parse_half(text.substr(comma + 1))};
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
    } else {
        write_file_atomic(out_path, content);
    }
}

/// A subcommand triggered both from a --config section and the command line
/// fires its callback once per trigger; the work must still run only once.
void set_once(CLI::App* sub, std::function<void()> fn) {
    auto ran = std::make_shared<bool>(false);
    sub->callback([ran, fn = std::move(fn)] {
        if (*ran) return;
        *ran = true;
        fn();
    });
}

/// Flags shared by every subcommand that runs a map.
struct RunOpts {
    std::string map = "e1";
    std::string alpha, beta, z0, z1;

    MapSpec spec() const {
        return {map_kind_from_name(map), parse_complex(alpha), parse_complex(beta)};
    }
    State initial() const { return {parse_complex(z0), parse_complex(z1)}; }
};

void add_run_options(CLI::App* sub, RunOpts& ro, bool required, bool with_initial = true) {
    sub->add_option("--map", ro.map, "map kind: e1, e8 or e9")->capture_default_str();
    auto* a = sub->add_option("--alpha", ro.alpha, "parameter alpha as re,im");
    auto* b = sub->add_option("--beta", ro.beta, "parameter beta as re,im");
    if (required) {
        a->required();
        b->required();
    }
    if (!with_initial) return;
    auto* p = sub->add_option("--z0", ro.z0, "initial z0 as re,im");
    auto* c = sub->add_option("--z1", ro.z1, "initial z1 as re,im");
    if (required) {
        p->required();
        c->required();
    }
}

/// Points either from a CSV file (--in) or by running the map.
std::vector<Complex> gather_points(const std::string& in_path, const RunOpts& ro,
                                   std::size_t n, CLI::App* sub) {
    if (!in_path.empty()) return points_from_csv(read_file(in_path));
    if (!sub->count("--alpha"))
        throw InvalidArgument("provide either --in CSV or the full --map/--alpha/--beta/"
                              "--z0/--z1 run flags");
    const Orbit orbit = iterate(ro.spec(), ro.initial(), n);
    if (orbit.status.kind != OrbitStatus::Kind::Completed)
        throw OrbitTerminated("orbit terminated before producing the requested points",
                              orbit.status);
    return orbit.points;
}

std::string fmt_c(const Complex& z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.6g,%.6g)", z.real(), z.imag());
    return buf;
}

std::string equilibria_text(const MapSpec& spec) {
    const auto reports = report(spec);
    const LemmaPredicates lm = lemma_predicates(spec);
    std::string s = std::string("map ") + map_kind_name(spec.kind) + "  alpha " +
                    fmt_c(spec.alpha) + "  beta " + fmt_c(spec.beta) + "\n";
    for (const EquilibriumReport& r : reports) {
        s += "equilibrium " + fmt_c(r.equilibrium) + (r.degenerate ? "  (degenerate)" : "") +
             "\n";
        s += "  charpoly  L^2 + " + fmt_c(r.poly.a1) + " L + " + fmt_c(r.poly.a0) + "\n";
        char mods[128];
        std::snprintf(mods, sizeof mods, "  roots     %s |%.6g|  %s |%.6g|\n",
                      fmt_c(r.roots.lambda_plus).c_str(), r.roots.mod_plus,
                      fmt_c(r.roots.lambda_minus).c_str(), r.roots.mod_minus);
        s += mods;
        s += std::string("  class     ") + stability_class_name(r.cls) +
             "  (published vocabulary: " + stability_published_label(r.cls) + ")\n";
    }
    s += std::string("lemmas      1:") + (lm.lemma1 ? "yes" : "no") +
         "  2:" + (lm.lemma2 ? "yes" : "no") + "  3:" + (lm.lemma3 ? "yes" : "no") + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"holomap: complex dynamics of three rational difference maps"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value config file");

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for the multistart cycle search")
        ->envname("HOLOMAP_SEED");

    std::string out_path;
    app.add_option("--out", out_path, "write output to this file atomically")
        ->configurable(false);

    // --- orbit ---
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate a map and export the orbit");
    RunOpts orbit_ro;
    std::size_t orbit_n = 50000;
    std::string orbit_format = "csv";
    add_run_options(orbit_cmd, orbit_ro, true);
    orbit_cmd->add_option("--n", orbit_n, "number of iterates")->capture_default_str();
    orbit_cmd->add_option("--format", orbit_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    set_once(orbit_cmd, [&] {
        const Orbit orbit = iterate(orbit_ro.spec(), orbit_ro.initial(), orbit_n);
        emit(orbit_format == "csv" ? orbit_to_csv(orbit) : orbit_to_json(orbit), out_path);
    });

    // --- equilibria ---
    auto* eq_cmd = app.add_subcommand("equilibria", "equilibria with stability analysis");
    RunOpts eq_ro;
    bool eq_json = false;
    add_run_options(eq_cmd, eq_ro, true, false);
    eq_cmd->add_flag("--json", eq_json, "machine-readable output");
    set_once(eq_cmd, [&] {
        const MapSpec spec = eq_ro.spec();
        emit(eq_json ? equilibria_to_json(spec) : equilibria_text(spec), out_path);
    });

    // --- audit ---
    auto* audit_cmd = app.add_subcommand("audit", "recompute published claims");
    bool audit_json = false;
    audit_cmd->add_flag("--json", audit_json, "machine-readable output");
    set_once(audit_cmd, 
        [&] { emit(audit_json ? audit_to_json() : render_audit_text(), out_path); });

    // --- cycles ---
    auto* cycles_cmd = app.add_subcommand("cycles", "multistart periodic-orbit search");
    RunOpts cycles_ro;
    std::size_t cycles_period = 2, cycles_starts = 1000;
    bool cycles_serial = false;
    add_run_options(cycles_cmd, cycles_ro, true);
    cycles_cmd->add_option("--period", cycles_period, "cycle period d")->required();
    cycles_cmd->add_option("--starts", cycles_starts, "number of Newton starts")
        ->capture_default_str();
    cycles_cmd->add_flag("--serial", cycles_serial, "use the serial reference kernel");
    set_once(cycles_cmd, [&] {
        const CycleSystem sys{cycles_ro.spec(), cycles_period};
        const auto cycles = cycles_serial ? find_cycles_serial(sys, cycles_starts, seed)
                                          : find_cycles(sys, cycles_starts, seed);
        emit(cycles_to_json(cycles), out_path);
    });

    // --- detect-period ---
    auto* det_cmd = app.add_subcommand("detect-period", "detect a limit cycle in an orbit");
    RunOpts det_ro;
    std::string det_in;
    std::size_t det_n = 10000, det_pmax = 64, det_window = 200;
    double det_tol = 0;
    add_run_options(det_cmd, det_ro, false);
    det_cmd->add_option("--in", det_in, "orbit CSV file (alternative to run flags)");
    det_cmd->add_option("--n", det_n, "iterates when running a map")->capture_default_str();
    det_cmd->add_option("--pmax", det_pmax, "largest period to test")->capture_default_str();
    det_cmd->add_option("--window", det_window, "comparison window")->capture_default_str();
    auto* det_tol_opt = det_cmd->add_option("--tol", det_tol, "absolute tolerance override");
    set_once(det_cmd, [&] {
        Orbit orbit;
        orbit.points = gather_points(det_in, det_ro, det_n, det_cmd);
        DetectOptions opts{det_pmax, det_window, std::nullopt};
        if (det_tol_opt->count()) opts.tol = det_tol;
        emit(period_detection_to_json(detect_period(orbit, opts)), out_path);
    });

    // --- lyapunov ---
    auto* lyap_cmd = app.add_subcommand("lyapunov", "largest Lyapunov exponent");
    RunOpts lyap_ro;
    LyapunovOptions lyap_opts;
    add_run_options(lyap_cmd, lyap_ro, true);
    lyap_cmd->add_option("--transient", lyap_opts.transient, "steps discarded first")
        ->capture_default_str();
    lyap_cmd->add_option("--steps", lyap_opts.steps, "accumulation steps")
        ->capture_default_str();
    lyap_cmd->add_option("--history-stride", lyap_opts.history_stride,
                         "record the running average every this many steps");
    set_once(lyap_cmd, [&] {
        emit(lyapunov_to_json(lyapunov_max(lyap_ro.spec(), lyap_ro.initial(), lyap_opts)),
             out_path);
    });

    // --- boxdim ---
    auto* box_cmd = app.add_subcommand("boxdim", "box-counting dimension of a state space");
    RunOpts box_ro;
    std::string box_in;
    std::size_t box_n = 50000;
    int box_kmin = 4, box_kmax = 10;
    bool box_serial = false;
    add_run_options(box_cmd, box_ro, false);
    box_cmd->add_option("--in", box_in, "orbit CSV file (alternative to run flags)");
    box_cmd->add_option("--n", box_n, "iterates when running a map")->capture_default_str();
    box_cmd->add_option("--kmin", box_kmin, "coarsest dyadic scale")->capture_default_str();
    box_cmd->add_option("--kmax", box_kmax, "finest dyadic scale")->capture_default_str();
    box_cmd->add_flag("--serial", box_serial, "use the serial reference kernel");
    set_once(box_cmd, [&] {
        const auto pts = gather_points(box_in, box_ro, box_n, box_cmd);
        const auto est = box_serial ? box_dimension_serial(pts, box_kmin, box_kmax)
                                    : box_dimension(pts, box_kmin, box_kmax);
        emit(box_dim_to_json(est), out_path);
    });

    // --- classify ---
    auto* cls_cmd = app.add_subcommand("classify", "verdict for one orbit");
    RunOpts cls_ro;
    ClassifyOptions cls_opts;
    add_run_options(cls_cmd, cls_ro, true);
    cls_cmd->add_option("--budget", cls_opts.budget, "orbit length examined")
        ->capture_default_str();
    cls_cmd->add_option("--lyap-steps", cls_opts.lyap_steps, "Lyapunov accumulation steps")
        ->capture_default_str();
    set_once(cls_cmd, [&] {
        emit(classification_to_json(classify_orbit(cls_ro.spec(), cls_ro.initial(), cls_opts)),
             out_path);
    });

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "verdict raster over 1 or 2 axes");
    RunOpts sweep_ro;
    std::vector<std::string> axis_specs;
    std::size_t sweep_budget = 5000;
    std::string sweep_format = "csv";
    bool sweep_serial_flag = false;
    add_run_options(sweep_cmd, sweep_ro, true);
    sweep_cmd
        ->add_option("--axis", axis_specs,
                     "axis as name:min:max:res with name in z0re,z0im,z1re,z1im,alre,alim,"
                     "bere,beim (repeat for a second axis)")
        ->required()
        ->expected(1, 2);
    sweep_cmd->add_option("--budget", sweep_budget, "orbit length per cell")
        ->capture_default_str();
    sweep_cmd->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep_cmd->add_flag("--serial", sweep_serial_flag, "use the serial reference kernel");
    set_once(sweep_cmd, [&] {
        SweepGrid grid;
        grid.base_spec = sweep_ro.spec();
        grid.base_state = sweep_ro.initial();
        for (const std::string& text : axis_specs) {
            SweepAxis ax;
            std::vector<std::string> parts;
            std::size_t pos = 0;
            while (true) {
                const std::size_t colon = text.find(':', pos);
                parts.push_back(text.substr(pos, colon - pos));
                if (colon == std::string::npos) break;
                pos = colon + 1;
            }
            if (parts.size() != 4)
                throw InvalidArgument("axis must be name:min:max:res, got '" + text + "'");
            ax.param = sweep_param_from_name(parts[0]);
            ax.min = std::stod(parts[1]);
            ax.max = std::stod(parts[2]);
            ax.resolution = std::stoul(parts[3]);
            grid.axes.push_back(ax);
        }
        ClassifyOptions opts = sweep_default_options();
        opts.budget = sweep_budget;
        grid = sweep_serial_flag ? sweep_serial(std::move(grid), opts, seed)
                                 : sweep(std::move(grid), opts, seed);
        emit(sweep_format == "csv" ? sweep_to_csv(grid) : sweep_to_json(grid), out_path);
    });

    // --- tables ---
    auto* tables_cmd = app.add_subcommand("tables", "stability tables with audit flags");
    set_once(tables_cmd, [&] { emit(render_stability_tables(), out_path); });

    // --- plot ---
    auto* plot_cmd = app.add_subcommand("plot", "render an orbit CSV as SVG");
    std::string plot_in, plot_kind = "series";
    PlotSpec plot_spec;
    plot_cmd->add_option("--in", plot_in, "orbit CSV file")->required();
    plot_cmd->add_option("--kind", plot_kind, "series or scatter")
        ->check(CLI::IsMember({"series", "scatter"}))
        ->capture_default_str();
    plot_cmd->add_option("--width", plot_spec.width, "SVG width px")->capture_default_str();
    plot_cmd->add_option("--height", plot_spec.height, "SVG height px")->capture_default_str();
    plot_cmd->add_option("--radius", plot_spec.marker_radius, "scatter marker radius px")
        ->capture_default_str();
    set_once(plot_cmd, [&] {
        plot_spec.kind =
            plot_kind == "series" ? PlotSpec::Kind::Series : PlotSpec::Kind::Scatter;
        emit(render_plot(points_from_csv(read_file(plot_in)), plot_spec), out_path);
    });

    // Allow every subcommand's options to come from a [subcommand] section
    // of the --config file.
    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
        sc->configurable();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const holomap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
