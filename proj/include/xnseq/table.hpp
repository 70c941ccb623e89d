#pragma once

#include <string>
#include <variant>
#include <vector>

#include "xnseq/common.hpp"

namespace xnseq {

// One table cell: integers print exactly, reals with 17 significant
// digits, strings verbatim (exact rationals travel as "p/q" strings so
// no precision is lost in serialization).
using Cell = std::variant<i64, u64, double, std::string>;

enum class TableFormat { csv, json };

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells);
};

TableFormat table_format_from_name(const std::string& name);

// CSV with a header row and RFC 4180 quoting, or a JSON array of objects.
std::string emit_table(const Table& table, TableFormat format);

}  // namespace xnseq
