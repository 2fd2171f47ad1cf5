#pragma once

#include <algorithm>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

namespace dsc {

/// One labeled batch of points for the root-locus plot.
struct RootPlotSeries {
    std::string label;
    std::vector<std::complex<double>> roots;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace detail

/// Scatter plot of root loci in the complex plane with the mirror line
/// Re z = -1/2.  Deterministic output: fixed formatting, no timestamps.
inline std::string render_root_plot_svg(const std::vector<RootPlotSeries>& series,
                                        int width = 720, int height = 520) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    const int ncolors = 8;
    double xmin = -1.1, xmax = 0.1, ymin = -0.5, ymax = 0.5;
    for (const auto& s : series)
        for (const auto& z : s.roots) {
            xmin = std::min(xmin, z.real());
            xmax = std::max(xmax, z.real());
            ymin = std::min(ymin, z.imag());
            ymax = std::max(ymax, z.imag());
        }
    double xpad = 0.08 * (xmax - xmin), ypad = 0.08 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;
    const double ml = 60, mr = 160, mt = 20, mb = 40; // margins, legend on the right
    double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };
    using detail::fmt;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\"/>\n";
    // axes
    if (ymin < 0 && ymax > 0)
        out += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" +
               fmt(ml + pw) + "\" y2=\"" + fmt(py(0)) + "\" stroke=\"#cccccc\"/>\n";
    if (xmin < 0 && xmax > 0)
        out += "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(px(0)) +
               "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"#cccccc\"/>\n";
    // mirror line
    if (xmin < -0.5 && xmax > -0.5) {
        out += "<line x1=\"" + fmt(px(-0.5)) + "\" y1=\"" + fmt(mt) + "\" x2=\"" +
               fmt(px(-0.5)) + "\" y2=\"" + fmt(mt + ph) +
               "\" stroke=\"#888888\" stroke-dasharray=\"6,4\"/>\n";
        out += "<text x=\"" + fmt(px(-0.5) + 4) + "\" y=\"" + fmt(mt + 14) +
               "\" font-family=\"monospace\" font-size=\"12\" fill=\"#888888\">Re = "
               "-1/2</text>\n";
    }
    // frame and range labels
    out += "<rect x=\"" + fmt(ml) + "\" y=\"" + fmt(mt) + "\" width=\"" + fmt(pw) +
           "\" height=\"" + fmt(ph) + "\" fill=\"none\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + fmt(ml) + "\" y=\"" + fmt(height - 12.0) +
           "\" font-family=\"monospace\" font-size=\"12\">Re: [" + fmt(xmin) + ", " +
           fmt(xmax) + "]  Im: [" + fmt(ymin) + ", " + fmt(ymax) + "]</text>\n";
    // points
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = palette[si % ncolors];
        for (const auto& z : series[si].roots)
            out += "<circle cx=\"" + fmt(px(z.real())) + "\" cy=\"" + fmt(py(z.imag())) +
                   "\" r=\"3.5\" fill=\"" + color + "\" fill-opacity=\"0.8\"/>\n";
    }
    // legend
    for (std::size_t si = 0; si < series.size(); ++si) {
        double y = mt + 16 + 18.0 * static_cast<double>(si);
        out += "<circle cx=\"" + fmt(width - mr + 14) + "\" cy=\"" + fmt(y - 4) +
               "\" r=\"4\" fill=\"" + palette[si % ncolors] + "\"/>\n";
        out += "<text x=\"" + fmt(width - mr + 24) + "\" y=\"" + fmt(y) +
               "\" font-family=\"monospace\" font-size=\"12\">" + series[si].label +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace dsc
