/**
 * @file io.cpp
 * @brief CSV/JSON serialization, stability-table text, atomic writes.
 */

#include "holomap/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace holomap {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

json cpx(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex cpx_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw IoError("expected a complex value as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json spec_json(const MapSpec& spec) {
    return {{"kind", map_kind_name(spec.kind)}, {"alpha", cpx(spec.alpha)},
            {"beta", cpx(spec.beta)}};
}

MapSpec spec_from(const json& j) {
    MapSpec spec;
    spec.kind = map_kind_from_name(j.at("kind").get<std::string>());
    spec.alpha = cpx_from(j.at("alpha"));
    spec.beta = cpx_from(j.at("beta"));
    return spec;
}

json status_json(const OrbitStatus& st) {
    switch (st.kind) {
        case OrbitStatus::Kind::Completed: return {{"kind", "completed"}};
        case OrbitStatus::Kind::ForbiddenHit:
            return {{"kind", "forbidden_hit"}, {"step", st.step}};
        case OrbitStatus::Kind::Overflow: return {{"kind", "overflow"}, {"step", st.step}};
    }
    return {};
}

OrbitStatus status_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "completed") return {OrbitStatus::Kind::Completed, 0};
    const auto step = j.at("step").get<std::size_t>();
    if (kind == "forbidden_hit") return {OrbitStatus::Kind::ForbiddenHit, step};
    if (kind == "overflow") return {OrbitStatus::Kind::Overflow, step};
    throw IoError("unknown orbit status kind: '" + kind + "'");
}

double parse_double_field(const std::string& field, const std::string& line) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || end != field.c_str() + field.size())
        throw IoError("malformed CSV number '" + field + "' in line '" + line + "'");
    return v;
}

}  // namespace

std::string points_to_csv(const std::vector<Complex>& pts) {
    std::string s = "n,re,im\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        s += std::to_string(i + 1);
        s += ',';
        s += format_double(pts[i].real());
        s += ',';
        s += format_double(pts[i].imag());
        s += '\n';
    }
    return s;
}

std::vector<Complex> points_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,re,im") throw IoError("bad CSV header: expected 'n,re,im'");
    std::vector<Complex> pts;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
            throw IoError("malformed CSV row '" + line + "': expected n,re,im");
        const double re = parse_double_field(line.substr(c1 + 1, c2 - c1 - 1), line);
        const double im = parse_double_field(line.substr(c2 + 1), line);
        pts.emplace_back(re, im);
    }
    return pts;
}

std::string orbit_to_csv(const Orbit& orbit) { return points_to_csv(orbit.points); }

std::string orbit_to_json(const Orbit& orbit) {
    json j;
    j["spec"] = spec_json(orbit.spec);
    j["initial"] = {{"z0", cpx(orbit.initial.z_prev)}, {"z1", cpx(orbit.initial.z_curr)}};
    j["status"] = status_json(orbit.status);
    json pts = json::array();
    for (const Complex& z : orbit.points) pts.push_back(cpx(z));
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

Orbit orbit_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("invalid orbit JSON: ") + e.what());
    }
    try {
        Orbit orbit;
        orbit.spec = spec_from(j.at("spec"));
        orbit.initial = {cpx_from(j.at("initial").at("z0")), cpx_from(j.at("initial").at("z1"))};
        orbit.status = status_from(j.at("status"));
        for (const json& p : j.at("points")) orbit.points.push_back(cpx_from(p));
        return orbit;
    } catch (const json::exception& e) {
        throw IoError(std::string("invalid orbit JSON: ") + e.what());
    }
}

std::string equilibrium_reports_to_json(const std::vector<EquilibriumReport>& reports) {
    json arr = json::array();
    for (const EquilibriumReport& r : reports) {
        json j;
        j["spec"] = spec_json(r.spec);
        j["equilibrium"] = cpx(r.equilibrium);
        j["degenerate"] = r.degenerate;
        j["charpoly"] = {{"a1", cpx(r.poly.a1)}, {"a0", cpx(r.poly.a0)}};
        j["roots"] = {{"lambda_plus", cpx(r.roots.lambda_plus)},
                      {"lambda_minus", cpx(r.roots.lambda_minus)},
                      {"moduli", {r.roots.mod_plus, r.roots.mod_minus}}};
        j["class"] = stability_class_name(r.cls);
        j["published_vocabulary"] = stability_published_label(r.cls);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string lemma_predicates_to_json(const MapSpec& spec, const LemmaPredicates& lm) {
    json j;
    j["spec"] = spec_json(spec);
    j["lemma1"] = lm.lemma1;
    j["lemma2"] = lm.lemma2;
    j["lemma3"] = lm.lemma3;
    return j.dump(2) + "\n";
}

std::string equilibria_to_json(const MapSpec& spec) {
    const std::vector<EquilibriumReport> reports = report(spec);
    const LemmaPredicates lm = lemma_predicates(spec);
    json j;
    j["spec"] = spec_json(spec);
    j["equilibria"] = json::parse(equilibrium_reports_to_json(reports));
    j["lemmas"] = {{"lemma1", lm.lemma1}, {"lemma2", lm.lemma2}, {"lemma3", lm.lemma3}};
    return j.dump(2) + "\n";
}

std::string cycles_to_json(const std::vector<Cycle>& cycles) {
    json arr = json::array();
    for (const Cycle& c : cycles) {
        json j;
        j["spec"] = spec_json(c.spec);
        j["period"] = c.period;
        json pts = json::array();
        for (const Complex& z : c.points) pts.push_back(cpx(z));
        j["points"] = std::move(pts);
        j["residual"] = c.residual;
        j["multiplier_moduli"] = {c.multiplier_moduli[0], c.multiplier_moduli[1]};
        j["stability"] = cycle_stability_name(c.stability);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string period_detection_to_json(const PeriodDetection& det) {
    json j;
    if (det.detected_period) {
        j["detected_period"] = *det.detected_period;
    } else {
        j["detected_period"] = nullptr;
    }
    json pts = json::array();
    for (const Complex& z : det.limit_cycle) pts.push_back(cpx(z));
    j["limit_cycle"] = std::move(pts);
    j["max_deviation"] = det.max_deviation;
    j["tol"] = det.tol;
    return j.dump(2) + "\n";
}

std::string lyapunov_to_json(const LyapunovEstimate& est) {
    json j;
    j["lambda_max"] = est.lambda_max;
    j["steps"] = est.steps_used;
    j["transient"] = est.transient_skipped;
    j["history"] = est.history;
    return j.dump(2) + "\n";
}

std::string box_dim_to_json(const BoxDimEstimate& est) {
    json j;
    j["dimension"] = est.dimension;
    j["fit_r2"] = est.fit_r2;
    json sc = json::array();
    for (const auto& [side, count] : est.scales) sc.push_back({side, count});
    j["scales"] = std::move(sc);
    return j.dump(2) + "\n";
}

std::string classification_to_json(const ClassificationReport& rep) {
    json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["spec"] = spec_json(rep.spec);
    j["initial"] = {{"z0", cpx(rep.initial.z_prev)}, {"z1", cpx(rep.initial.z_curr)}};
    j["iterates"] = rep.iterates;
    switch (rep.verdict) {
        case Verdict::Convergent: j["limit"] = cpx(rep.limit); break;
        case Verdict::PeriodicConvergent: {
            j["period"] = rep.period;
            json pts = json::array();
            for (const Complex& z : rep.cycle_points) pts.push_back(cpx(z));
            j["cycle_points"] = std::move(pts);
            break;
        }
        case Verdict::Unbounded:
        case Verdict::ForbiddenHit: j["guard_step"] = rep.guard_step; break;
        default: break;
    }
    json diag;
    diag["final_deviation"] = rep.final_deviation;
    if (rep.detected_period) diag["detected_period"] = *rep.detected_period;
    if (rep.lambda_max) diag["lambda_max"] = *rep.lambda_max;
    j["diagnostics"] = std::move(diag);
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepGrid& grid) {
    std::string s;
    const bool two = grid.axes.size() == 2;
    if (two) {
        s = std::string("i,j,") + sweep_param_name(grid.axes[0].param) + "," +
            sweep_param_name(grid.axes[1].param) + ",code,verdict\n";
    } else {
        s = std::string("i,") + sweep_param_name(grid.axes[0].param) + ",code,verdict\n";
    }
    const std::size_t inner = two ? grid.axes[1].resolution : 1;
    for (std::size_t flat = 0; flat < grid.raster.size(); ++flat) {
        const std::size_t i = flat / inner, jdx = flat % inner;
        const auto v = static_cast<Verdict>(grid.raster[flat]);
        s += std::to_string(i);
        if (two) s += ',' + std::to_string(jdx);
        s += ',' + format_double(grid.axes[0].value(i));
        if (two) s += ',' + format_double(grid.axes[1].value(jdx));
        s += ',' + std::to_string(unsigned(grid.raster[flat]));
        s += ',';
        s += verdict_name(v);
        s += '\n';
    }
    return s;
}

std::string sweep_to_json(const SweepGrid& grid) {
    json j;
    j["base"] = {{"spec", spec_json(grid.base_spec)},
                 {"z0", cpx(grid.base_state.z_prev)},
                 {"z1", cpx(grid.base_state.z_curr)}};
    json axes = json::array();
    for (const SweepAxis& ax : grid.axes)
        axes.push_back({{"param", sweep_param_name(ax.param)},
                        {"min", ax.min},
                        {"max", ax.max},
                        {"resolution", ax.resolution}});
    j["axes"] = std::move(axes);
    j["raster"] = grid.raster;
    return j.dump(2) + "\n";
}

std::string audit_to_json() {
    json j;
    json stab = json::array();
    for (const StabilityAuditRow& a : audit_stability_tables()) {
        stab.push_back({{"table", a.source.table},
                        {"case", a.source.params},
                        {"printed_claim", a.source.claim_text},
                        {"printed_inference", a.source.printed_inference},
                        {"computed_moduli", {a.roots.mod_plus, a.roots.mod_minus}},
                        {"computed_class", stability_class_name(a.cls)},
                        {"poly_error", a.poly_error},
                        {"poly_matches", a.poly_matches},
                        {"claim_agrees", a.claim_agrees}});
    }
    j["stability"] = std::move(stab);
    json findings = json::array();
    for (const AuditFinding& f : audit_cycle_tables())
        findings.push_back(
            {{"id", f.id}, {"discrepancy", f.discrepancy}, {"message", f.message}});
    j["findings"] = std::move(findings);
    json cells = json::array();
    for (const VerdictAuditCell& c : audit_verdict_table())
        cells.push_back({{"row", c.row},
                         {"map", map_kind_name(c.map)},
                         {"published", c.published},
                         {"recomputed", c.recomputed},
                         {"agrees", c.agrees},
                         {"detail", c.detail}});
    j["verdict_table"] = std::move(cells);
    return j.dump(2) + "\n";
}

std::string render_stability_tables() {
    std::string s;
    char line[256];
    for (const char* table : {"e1", "e8", "e9"}) {
        s += "table ";
        s += table;
        s += (std::string(table) == "e1") ? " (equilibria +/-sqrt(alpha+beta))\n"
                                          : " (equilibrium alpha+beta)\n";
        std::snprintf(line, sizeof line, "  %-14s %-38s %-8s %-22s %-30s %s\n", "case",
                      "printed polynomial", "claim", "computed moduli", "computed class",
                      "agree");
        s += line;
        for (const StabilityAuditRow& a : audit_stability_tables()) {
            if (std::string(a.source.table) != table) continue;
            char poly[96], mods[64];
            std::snprintf(poly, sizeof poly, "L^2 + (%.6g,%.6g) L + (%.6g,%.6g)",
                          a.source.printed_poly.a1.real(), a.source.printed_poly.a1.imag(),
                          a.source.printed_poly.a0.real(), a.source.printed_poly.a0.imag());
            std::snprintf(mods, sizeof mods, "%.6f %.6f", a.roots.mod_plus, a.roots.mod_minus);
            std::snprintf(line, sizeof line, "  %-14s %-38s %-8s %-22s %-30s %s\n",
                          a.source.params, poly, a.source.claim_text, mods,
                          stability_class_name(a.cls), a.claim_agrees ? "yes" : "no");
            s += line;
        }
        s += "\n";
    }
    return s;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open temporary file '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename temporary file onto '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace holomap
