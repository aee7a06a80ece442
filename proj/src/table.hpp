#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fairtab {

enum class ColumnKind : std::uint8_t { Numeric, Categorical };

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::Numeric;
    // Ordered category vocabulary (first appearance in the training data).
    // Empty for numeric columns.
    std::vector<std::string> categories;
};

// Column layout plus the fairness designations. The protected and label
// designations are optional; operations that need them throw ConfigError when
// they are missing.
struct TableSchema {
    std::vector<ColumnSpec> columns;
    std::string protected_column;
    std::string underprivileged_value;
    std::string label_column;
    std::string favorable_value;

    bool has_fairness() const { return !protected_column.empty() && !label_column.empty(); }
    std::size_t column_index(const std::string& name) const;  // throws SchemaError
    int find_column(const std::string& name) const;           // -1 when absent
    std::int32_t category_code(std::size_t col, const std::string& value) const;  // -1 when absent

    // Checks name uniqueness and, when fairness columns are designated, that
    // they are categorical with exactly two categories.
    void validate() const;
};

struct Column {
    std::vector<double> num;        // populated for numeric columns
    std::vector<std::int32_t> cat;  // category codes for categorical columns
};

struct Table {
    TableSchema schema;
    std::vector<Column> cols;

    std::size_t rows() const;
    static Table with_schema(TableSchema s);

    Table select_rows(const std::vector<std::uint32_t>& idx) const;
    std::string cell_text(std::size_t row, std::size_t col) const;
};

// Shortest representation that round-trips the exact double.
std::string format_double(double v);

}  // namespace fairtab
