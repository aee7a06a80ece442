#pragma once

#include <string>
#include <vector>

#include "table.hpp"

namespace fairtab {

struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;  // -1 when absent
};

// Reads a delimited text file with a header row. Cells are trimmed of
// surrounding whitespace and double quotes; no embedded-delimiter escaping is
// supported beyond quoting.
CsvData read_csv(const std::string& path, char delimiter = ',');

// Parses a CSV against a known schema: numeric cells via strtod, categorical
// cells looked up in the vocabulary (unknown values are a SchemaError).
Table read_table_csv(const std::string& path, const TableSchema& schema,
                     char delimiter = ',');

void write_table_csv(const Table& table, const std::string& path);

}  // namespace fairtab
