#include "gardner/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gardner/errors.hpp"

namespace gardner {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_field_csv(const std::string& path, const Field& f) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << "x,value\n";
    for (int j = 0; j < f.size(); ++j) {
        out << format_double(f.grid.x(j)) << ',' << format_double(f.values[j]) << '\n';
    }
}

Field read_field_csv(const std::string& path, const GridSpec& grid) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,value", 0) != 0) {
        throw ValidationError("bad field CSV header in " + path);
    }
    std::vector<double> values;
    values.reserve(static_cast<size_t>(grid.size()));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ValidationError("bad field CSV row in " + path);
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (static_cast<int>(values.size()) != grid.size()) {
        throw ValidationError("field CSV row count does not match grid in " + path);
    }
    return Field(grid, std::move(values));
}

void write_table_csv(const std::string& path, const std::string& header,
                     const std::vector<std::vector<double>>& rows, const Config* config) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    if (config) {
        for (const auto& [k, v] : config->entries()) out << "# " << k << " = " << v << '\n';
    }
    out << header << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
}

void write_report(const std::string& path,
                  const std::vector<std::pair<std::string, std::string>>& fields,
                  const Config* config) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    for (const auto& [k, v] : fields) out << k << " = " << v << '\n';
    if (config) {
        for (const auto& [k, v] : config->entries()) out << "config." << k << " = " << v << '\n';
    }
}

}  // namespace gardner
