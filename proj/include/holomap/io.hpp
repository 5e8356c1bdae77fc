#pragma once
/**
 * @file io.hpp
 * @brief Serialization: CSV and JSON orbit formats (lossless round-trip via
 *        17-significant-digit decimals), JSON renderings of every report
 *        type, the aligned stability-table text, and atomic file writes.
 */

#include "holomap/audit.hpp"
#include "holomap/classify.hpp"

#include <string>

namespace holomap {

/// Shortest-exact decimal for doubles used across CSV ( %.17g ).
std::string format_double(double v);

/// Header "n,re,im", rows numbered from 1, LF line endings.
std::string points_to_csv(const std::vector<Complex>& pts);
std::vector<Complex> points_from_csv(const std::string& text);

std::string orbit_to_csv(const Orbit& orbit);  ///< points only; seed pair not encoded

std::string orbit_to_json(const Orbit& orbit);
Orbit orbit_from_json(const std::string& text);

std::string equilibrium_reports_to_json(const std::vector<EquilibriumReport>& reports);
std::string lemma_predicates_to_json(const MapSpec& spec, const LemmaPredicates& lm);
/// Full equilibrium analysis (reports + lemma predicates) as one object.
std::string equilibria_to_json(const MapSpec& spec);
std::string cycles_to_json(const std::vector<Cycle>& cycles);
std::string period_detection_to_json(const PeriodDetection& det);
std::string lyapunov_to_json(const LyapunovEstimate& est);
std::string box_dim_to_json(const BoxDimEstimate& est);
std::string classification_to_json(const ClassificationReport& rep);
std::string sweep_to_csv(const SweepGrid& grid);
std::string sweep_to_json(const SweepGrid& grid);
std::string audit_to_json();

/// Aligned text reproduction of the three published stability tables with
/// recomputed moduli and agree/disagree flags; byte-identical across runs.
std::string render_stability_tables();

/// Writes via a temp file in the destination directory plus rename, so a
/// crash never leaves a partial file at `path`.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace holomap
