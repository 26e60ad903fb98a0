#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irsmec/engine.hpp"

namespace irsmec {

// Fixed 9-significant-digit rendering so CSV bytes are comparable across
// runs and platforms.
std::string format_number(double value);

// Trajectory CSV for one scenario. Columns:
//   slot,time_s,mean_E_mJ,ci_low_mJ,ci_high_mJ,mean_Ev_mJ,mean_Eo_mJ,mean_Ec_mJ
// Energies are converted to mJ at this boundary; slot 0 carries the initial
// level with zero ledger means.
std::string trajectory_csv(const AggregateResult& result, double tti_s);

// Ratio-sweep CSV covering every scenario of a sweep. Columns:
//   l_bits,scenario,ratio_mean,ratio_ci_low,ratio_ci_high
struct LabeledRatioSeries {
    std::string scenario;
    std::vector<RatioPoint> points;
};

std::string ratio_csv(const std::vector<LabeledRatioSeries>& series);

// Minimal strict CSV reader used by the chart renderer. Throws IoError
// naming the offending row/column on malformed input.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const; // throws if absent
};

CsvTable parse_csv(const std::string& text, const std::string& origin);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace irsmec
