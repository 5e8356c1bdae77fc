/**
 * @file svg.cpp
 * @brief Hand-rolled SVG output: component series (two polylines) and
 *        state-space scatter. Purely string-based and deterministic.
 */

#include "holomap/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace holomap {

namespace {

struct Range {
    double lo, hi;
};

/// Pads by 5%; a zero span becomes a unit span centered on the data.
Range padded(double lo, double hi) {
    if (lo == hi) return {lo - 0.5, hi + 0.5};
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

std::string fmt2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

constexpr double kMarginLeft = 60, kMarginRight = 20, kMarginTop = 20, kMarginBottom = 40;

struct Frame {
    double x0, y0, w, h;  // plot area in pixels
    Range xr, yr;

    double px(double x) const { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * w; }
    double py(double y) const { return y0 + h - (y - yr.lo) / (yr.hi - yr.lo) * h; }
};

std::string header(int width, int height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
}

std::string frame_and_labels(const Frame& f) {
    std::string s;
    s += "<rect x=\"" + fmt2(f.x0) + "\" y=\"" + fmt2(f.y0) + "\" width=\"" + fmt2(f.w) +
         "\" height=\"" + fmt2(f.h) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    auto label = [](double x, double y, const std::string& text, const char* anchor) {
        return "<text x=\"" + fmt2(x) + "\" y=\"" + fmt2(y) + "\" font-size=\"12\" " +
               "font-family=\"monospace\" text-anchor=\"" + anchor + "\">" + text +
               "</text>\n";
    };
    s += label(f.x0, f.y0 + f.h + 16, fmt_label(f.xr.lo), "start");
    s += label(f.x0 + f.w, f.y0 + f.h + 16, fmt_label(f.xr.hi), "end");
    s += label(f.x0 - 6, f.y0 + f.h, fmt_label(f.yr.lo), "end");
    s += label(f.x0 - 6, f.y0 + 10, fmt_label(f.yr.hi), "end");
    return s;
}

std::string polyline(const std::string& pts, const char* color) {
    return "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1\" points=\"" + pts + "\"/>\n";
}

}  // namespace

std::string render_plot(const std::vector<Complex>& points, const PlotSpec& spec) {
    if (points.empty()) throw InvalidArgument("cannot plot an empty point list");

    Frame f;
    f.x0 = kMarginLeft;
    f.y0 = kMarginTop;
    f.w = spec.width - kMarginLeft - kMarginRight;
    f.h = spec.height - kMarginTop - kMarginBottom;
    if (f.w <= 0 || f.h <= 0) throw InvalidArgument("plot size too small for margins");

    std::string s = header(spec.width, spec.height);
    if (spec.kind == PlotSpec::Kind::Series) {
        double lo = points[0].real(), hi = lo;
        for (const Complex& z : points) {
            lo = std::min({lo, z.real(), z.imag()});
            hi = std::max({hi, z.real(), z.imag()});
        }
        f.xr = padded(1.0, double(points.size()));
        f.yr = padded(lo, hi);
        s += frame_and_labels(f);
        std::string re_pts, im_pts;
        re_pts.reserve(points.size() * 14);
        im_pts.reserve(points.size() * 14);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::string x = fmt2(f.px(double(i + 1)));
            re_pts += x + "," + fmt2(f.py(points[i].real())) + " ";
            im_pts += x + "," + fmt2(f.py(points[i].imag())) + " ";
        }
        if (!re_pts.empty()) re_pts.pop_back();
        if (!im_pts.empty()) im_pts.pop_back();
        // Component colors follow the published figures: real green,
        // imaginary blue.
        s += polyline(re_pts, "green");
        s += polyline(im_pts, "blue");
    } else {
        double xlo = points[0].real(), xhi = xlo, ylo = points[0].imag(), yhi = ylo;
        for (const Complex& z : points) {
            xlo = std::min(xlo, z.real());
            xhi = std::max(xhi, z.real());
            ylo = std::min(ylo, z.imag());
            yhi = std::max(yhi, z.imag());
        }
        f.xr = padded(xlo, xhi);
        f.yr = padded(ylo, yhi);
        s += frame_and_labels(f);
        const std::string r = fmt_label(spec.marker_radius);
        for (const Complex& z : points) {
            s += "<circle cx=\"" + fmt2(f.px(z.real())) + "\" cy=\"" + fmt2(f.py(z.imag())) +
                 "\" r=\"" + r + "\" fill=\"black\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace holomap
