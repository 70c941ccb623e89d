#include "xnseq/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace xnseq {

void Table::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns.size())
        throw std::invalid_argument("Table::add_row: cell count does not match columns");
    rows.push_back(std::move(cells));
}

TableFormat table_format_from_name(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw std::invalid_argument("unknown output format: " + name);
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string cell_text(const Cell& cell) {
    if (const i64* v = std::get_if<i64>(&cell)) return std::to_string(*v);
    if (const u64* v = std::get_if<u64>(&cell)) return std::to_string(*v);
    if (const double* v = std::get_if<double>(&cell)) return format_double(*v);
    return std::get<std::string>(cell);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

std::string json_value(const Cell& cell) {
    if (std::holds_alternative<std::string>(cell)) return json_quote(std::get<std::string>(cell));
    return cell_text(cell);
}

}  // namespace

std::string emit_table(const Table& table, TableFormat format) {
    std::string out;
    if (format == TableFormat::csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (i) out += ',';
            out += csv_quote(table.columns[i]);
        }
        out += '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += csv_quote(cell_text(row[i]));
            }
            out += '\n';
        }
        return out;
    }
    out = "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out += (r == 0) ? "\n" : ",\n";
        out += "  {";
        for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
            if (i) out += ", ";
            out += json_quote(table.columns[i]);
            out += ": ";
            out += json_value(table.rows[r][i]);
        }
        out += "}";
    }
    out += table.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

}  // namespace xnseq
