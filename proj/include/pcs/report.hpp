#ifndef PCS_REPORT_HPP
#define PCS_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace pcs {

enum class OutputFormat { csv, json, table };

using Cell = std::variant<std::int64_t, double, std::string>;

/// A flat table: one header, rows of cells. All three output formats are
/// rendered from the same cells.
struct Report {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// %.17g; non-finite values render as "nan"/"inf" in CSV and null in JSON.
std::string format_double(double value);

void write_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);
/// Human-readable, four decimals.
void write_table(const Report& report, std::ostream& out);
void write_report(const Report& report, OutputFormat format, std::ostream& out);

}  // namespace pcs

#endif  // PCS_REPORT_HPP
