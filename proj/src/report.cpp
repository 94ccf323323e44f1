#include "pcs/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace pcs {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_cell(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return format_double(v);
            else return csv_field(v);
        },
        cell);
}

std::string json_cell(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return std::isfinite(v) ? format_double(v) : "null";
            else return nlohmann::json(v).dump();
        },
        cell);
}

std::string table_cell(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.4f", v);
                return buf;
            } else {
                return v;
            }
        },
        cell);
}

}  // namespace

void write_csv(const Report& report, std::ostream& out) {
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
        out << (c ? "," : "") << report.columns[c];
    }
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
        out << '\n';
    }
}

void write_json(const Report& report, std::ostream& out) {
    out << "{\n  \"command\": " << nlohmann::json(report.command).dump() << ",\n  \"rows\": [";
    for (std::size_t r = 0; r < report.rows.size(); ++r) {
        out << (r ? ",\n    {" : "\n    {");
        const auto& row = report.rows[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? ", " : "") << nlohmann::json(report.columns[c]).dump() << ": "
                << json_cell(row[c]);
        }
        out << '}';
    }
    out << (report.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_table(const Report& report, std::ostream& out) {
    std::vector<std::vector<std::string>> text;
    std::vector<std::size_t> width(report.columns.size());
    for (std::size_t c = 0; c < report.columns.size(); ++c) width[c] = report.columns[c].size();
    for (const auto& row : report.rows) {
        auto& line = text.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(table_cell(row[c]));
            width[c] = std::max(width[c], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << "  ";
            out << cells[c] << std::string(width[c] - cells[c].size(), ' ');
        }
        out << '\n';
    };
    emit(report.columns);
    for (const auto& line : text) emit(line);
}

void write_report(const Report& report, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::csv: write_csv(report, out); break;
        case OutputFormat::json: write_json(report, out); break;
        case OutputFormat::table: write_table(report, out); break;
    }
}

}  // namespace pcs
