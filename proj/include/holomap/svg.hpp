#pragma once
/**
 * @file svg.hpp
 * @brief Minimal deterministic SVG rendering: a two-polyline component
 *        series plot (real part green, imaginary part blue) and a
 *        state-space scatter of small circles. No external renderer.
 */

#include "holomap/types.hpp"

namespace holomap {

struct PlotSpec {
    enum class Kind { Series, Scatter };
    Kind kind = Kind::Series;
    int width = 960;
    int height = 600;
    double marker_radius = 0.5;  ///< scatter circle radius in pixels
};

/// Renders the points per `spec.kind`. Axes pad the data extent by 5%; a
/// degenerate extent falls back to a unit span centered on the data.
/// Throws InvalidArgument on empty input.
std::string render_plot(const std::vector<Complex>& points, const PlotSpec& spec);

}  // namespace holomap
