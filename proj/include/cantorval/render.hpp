#ifndef CANTORVAL_RENDER_HPP
#define CANTORVAL_RENDER_HPP

#include "cantorval/interval_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cantorval {

struct DiagramRow {
    std::string label;
    IntervalSet set;
};

// Depth diagram: one horizontal band per row, intervals as filled rectangles,
// an optional highlight interval overpainted on every row it meets. Output is
// byte-deterministic for identical input: fixed decimal coordinate
// formatting, stable ordering, no timestamps or generated ids.
struct DiagramSpec {
    std::vector<DiagramRow> rows;
    std::optional<Interval> highlight;
    // Common x-range; defaults to the bounding interval of the first row.
    std::optional<Interval> x_range;
    int width_px = 1000;
    int row_height_px = 28;
    int tick_precision = 4;
    int coord_precision = 3;
    std::string band_fill = "#31708e";
    std::string highlight_fill = "#d9534f";
    std::string background_fill = "#ffffff";
    std::string text_fill = "#222222";
};

// Standalone SVG 1.1 document. Throws std::invalid_argument when rows are
// empty, the x-range is degenerate, or a row leaves the declared x-range.
std::string render_svg(const DiagramSpec& spec);

}  // namespace cantorval

#endif
