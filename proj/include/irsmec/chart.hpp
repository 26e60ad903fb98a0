#pragma once

#include <string>
#include <utility>
#include <vector>

namespace irsmec {

struct ChartSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
    int width_px = 880;
    int height_px = 560;
};

// Deterministic SVG line chart: fixed dimensions, palette, tick layout and
// number formatting, so identical input data yields identical bytes.
// Throws IoError when a series is empty or the spec has none.
std::string render_chart_svg(const ChartSpec& spec);

void emit_chart(const ChartSpec& spec, const std::string& path);

// Builds chart series from emitted CSV artifacts. Malformed cells raise
// IoError naming the row and column.
ChartSeries trajectory_series_from_csv(const std::string& csv_text,
                                       const std::string& origin,
                                       const std::string& label);

std::vector<ChartSeries> ratio_series_from_csv(const std::string& csv_text,
                                               const std::string& origin);

} // namespace irsmec
