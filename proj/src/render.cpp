#include "cantorval/render.hpp"

#include <cstdio>
#include <stdexcept>

namespace cantorval {

namespace {

constexpr int kMarginLeft = 110;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 10;
constexpr int kMarginBottom = 30;
constexpr int kBandGap = 8;

std::string fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

std::string escape_text(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const DiagramSpec& spec) {
    if (spec.rows.empty()) throw std::invalid_argument("render_svg: no rows");
    Interval range = spec.x_range ? *spec.x_range
                                  : (spec.rows.front().set.empty()
                                         ? throw std::invalid_argument(
                                               "render_svg: first row is empty and no x-range given")
                                         : spec.rows.front().set.bounding());
    if (range.lo == range.hi) throw std::invalid_argument("render_svg: degenerate x-range");
    for (const DiagramRow& row : spec.rows) {
        if (!row.set.empty() && !range.contains(row.set.bounding())) {
            throw std::invalid_argument("render_svg: row '" + row.label +
                                        "' leaves the declared x-range");
        }
    }
    const int plot_w = spec.width_px - kMarginLeft - kMarginRight;
    if (plot_w <= 0 || spec.row_height_px <= kBandGap) {
        throw std::invalid_argument("render_svg: canvas too small");
    }
    const int height = kMarginTop + static_cast<int>(spec.rows.size()) * spec.row_height_px +
                       kMarginBottom;
    const Rational span = range.hi - range.lo;
    const auto x_of = [&](const Rational& v) {
        return kMarginLeft + to_double((v - range.lo) / span) * plot_w;
    };
    const int band_h = spec.row_height_px - kBandGap;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
           std::to_string(spec.width_px) + " " + std::to_string(height) + "\" width=\"" +
           std::to_string(spec.width_px) + "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width_px) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"" + spec.background_fill + "\"/>\n";

    for (std::size_t r = 0; r < spec.rows.size(); ++r) {
        const DiagramRow& row = spec.rows[r];
        const int y = kMarginTop + static_cast<int>(r) * spec.row_height_px + kBandGap / 2;
        svg += "<g class=\"band\">\n";
        svg += "<text class=\"label\" x=\"8\" y=\"" + std::to_string(y + band_h / 2 + 4) +
               "\" font-family=\"monospace\" font-size=\"12\" fill=\"" + spec.text_fill + "\">" +
               escape_text(row.label) + "</text>\n";
        for (const Interval& part : row.set.intervals()) {
            const double x0 = x_of(part.lo);
            const double x1 = x_of(part.hi);
            svg += "<rect class=\"part\" x=\"" + fixed(x0, spec.coord_precision) + "\" y=\"" +
                   std::to_string(y) + "\" width=\"" + fixed(x1 - x0, spec.coord_precision) +
                   "\" height=\"" + std::to_string(band_h) + "\" fill=\"" + spec.band_fill +
                   "\"/>\n";
        }
        if (spec.highlight) {
            for (const Interval& part : row.set.intervals()) {
                if (!part.intersects(*spec.highlight)) continue;
                const Rational lo = part.lo > spec.highlight->lo ? part.lo : spec.highlight->lo;
                const Rational hi = part.hi < spec.highlight->hi ? part.hi : spec.highlight->hi;
                if (lo >= hi) continue;  // touch only, nothing to paint
                const double x0 = x_of(lo);
                const double x1 = x_of(hi);
                svg += "<rect class=\"highlight\" x=\"" + fixed(x0, spec.coord_precision) +
                       "\" y=\"" + std::to_string(y) + "\" width=\"" +
                       fixed(x1 - x0, spec.coord_precision) + "\" height=\"" +
                       std::to_string(band_h) + "\" fill=\"" + spec.highlight_fill + "\"/>\n";
            }
        }
        svg += "</g>\n";
    }

    const int axis_y = kMarginTop + static_cast<int>(spec.rows.size()) * spec.row_height_px + 6;
    svg += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + std::to_string(axis_y) +
           "\" x2=\"" + std::to_string(kMarginLeft + plot_w) + "\" y2=\"" + std::to_string(axis_y) +
           "\" stroke=\"" + spec.text_fill + "\" stroke-width=\"1\"/>\n";
    svg += "<text class=\"tick\" x=\"" + std::to_string(kMarginLeft) + "\" y=\"" +
           std::to_string(axis_y + 16) + "\" font-family=\"monospace\" font-size=\"11\" fill=\"" +
           spec.text_fill + "\">" + to_decimal_string(range.lo, spec.tick_precision) + "</text>\n";
    svg += "<text class=\"tick\" x=\"" + std::to_string(kMarginLeft + plot_w) + "\" y=\"" +
           std::to_string(axis_y + 16) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\" fill=\"" +
           spec.text_fill + "\">" + to_decimal_string(range.hi, spec.tick_precision) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace cantorval
