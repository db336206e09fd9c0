#ifndef GARDNER_CSV_HPP
#define GARDNER_CSV_HPP

#include <string>
#include <vector>

#include "gardner/config.hpp"
#include "gardner/field.hpp"

namespace gardner {

/// Shortest round-trip decimal form (17 significant digits), deterministic.
std::string format_double(double v);

/// Field CSV: header `x,value`, one row per grid point.
void write_field_csv(const std::string& path, const Field& f);
Field read_field_csv(const std::string& path, const GridSpec& grid);

/// Generic table: header row then rows of formatted doubles. If `config` is
/// non-null its entries are embedded as leading `# key = value` lines.
void write_table_csv(const std::string& path, const std::string& header,
                     const std::vector<std::vector<double>>& rows,
                     const Config* config = nullptr);

/// Flat `key = value` report with the resolved config appended under
/// `config.` keys.
void write_report(const std::string& path,
                  const std::vector<std::pair<std::string, std::string>>& fields,
                  const Config* config = nullptr);

}  // namespace gardner

#endif
