#include "irsmec/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "irsmec/errors.hpp"

namespace irsmec {

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string trajectory_csv(const AggregateResult& result, double tti_s) {
    std::ostringstream out;
    out << "slot,time_s,mean_E_mJ,ci_low_mJ,ci_high_mJ,mean_Ev_mJ,mean_Eo_mJ,mean_Ec_mJ\n";
    const double to_mj = 1.0e3;
    for (std::size_t t = 0; t < result.mean_energy_j.size(); ++t) {
        out << t << ',' << format_number(static_cast<double>(t) * tti_s) << ','
            << format_number(result.mean_energy_j[t] * to_mj) << ','
            << format_number(result.ci_low_j[t] * to_mj) << ','
            << format_number(result.ci_high_j[t] * to_mj) << ','
            << format_number(result.mean_harvested_j[t] * to_mj) << ','
            << format_number(result.mean_offload_saved_j[t] * to_mj) << ','
            << format_number(result.mean_consumption_j[t] * to_mj) << '\n';
    }
    return out.str();
}

std::string ratio_csv(const std::vector<LabeledRatioSeries>& series) {
    std::ostringstream out;
    out << "l_bits,scenario,ratio_mean,ratio_ci_low,ratio_ci_high\n";
    for (const auto& entry : series) {
        for (const auto& point : entry.points) {
            out << point.l_bits << ',' << entry.scenario << ','
                << format_number(point.stats.mean) << ','
                << format_number(point.stats.ci_low) << ','
                << format_number(point.stats.ci_high) << '\n';
        }
    }
    return out.str();
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw IoError("CSV is missing column '" + name + "'");
}

CsvTable parse_csv(const std::string& text, const std::string& origin) {
    CsvTable table;
    std::istringstream input(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream splitter(line);
        while (std::getline(splitter, field, ',')) {
            fields.push_back(field);
        }
        if (line.back() == ',') {
            fields.emplace_back();
        }
        if (table.header.empty()) {
            table.header = std::move(fields);
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw IoError(origin + ": row " + std::to_string(line_no) + " has " +
                          std::to_string(fields.size()) + " fields, expected " +
                          std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    if (table.header.empty()) {
        throw IoError(origin + ": empty CSV");
    }
    return table;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << content;
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace irsmec
