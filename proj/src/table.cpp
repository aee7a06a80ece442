#include "table.hpp"

#include <charconv>
#include <unordered_set>

#include "errors.hpp"

namespace fairtab {

std::size_t TableSchema::column_index(const std::string& name) const {
    const int i = find_column(name);
    if (i < 0) throw SchemaError("no column named '" + name + "'");
    return static_cast<std::size_t>(i);
}

int TableSchema::find_column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return static_cast<int>(i);
    return -1;
}

std::int32_t TableSchema::category_code(std::size_t col, const std::string& value) const {
    const auto& cats = columns[col].categories;
    for (std::size_t i = 0; i < cats.size(); ++i)
        if (cats[i] == value) return static_cast<std::int32_t>(i);
    return -1;
}

void TableSchema::validate() const {
    std::unordered_set<std::string> names;
    for (const ColumnSpec& c : columns) {
        if (!names.insert(c.name).second)
            throw SchemaError("duplicate column name '" + c.name + "'");
        std::unordered_set<std::string> cats(c.categories.begin(), c.categories.end());
        if (cats.size() != c.categories.size())
            throw SchemaError("duplicate category in column '" + c.name + "'");
    }
    auto check_binary = [&](const std::string& col, const std::string& value,
                            const char* role) {
        if (col.empty()) return;
        const std::size_t i = column_index(col);
        if (columns[i].kind != ColumnKind::Categorical || columns[i].categories.size() != 2)
            throw SchemaError(std::string(role) + " column '" + col +
                              "' must be categorical with exactly 2 categories");
        if (category_code(i, value) < 0)
            throw SchemaError(std::string(role) + " value '" + value +
                              "' not found in column '" + col + "'");
    };
    check_binary(protected_column, underprivileged_value, "protected");
    check_binary(label_column, favorable_value, "label");
}

std::size_t Table::rows() const {
    if (cols.empty()) return 0;
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (schema.columns[i].kind == ColumnKind::Numeric) return cols[i].num.size();
    return cols[0].cat.size();
}

Table Table::with_schema(TableSchema s) {
    Table t;
    t.schema = std::move(s);
    t.cols.resize(t.schema.columns.size());
    return t;
}

Table Table::select_rows(const std::vector<std::uint32_t>& idx) const {
    Table out = with_schema(schema);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (schema.columns[c].kind == ColumnKind::Numeric) {
            out.cols[c].num.reserve(idx.size());
            for (std::uint32_t r : idx) out.cols[c].num.push_back(cols[c].num[r]);
        } else {
            out.cols[c].cat.reserve(idx.size());
            for (std::uint32_t r : idx) out.cols[c].cat.push_back(cols[c].cat[r]);
        }
    }
    return out;
}

std::string Table::cell_text(std::size_t row, std::size_t col) const {
    if (schema.columns[col].kind == ColumnKind::Numeric)
        return format_double(cols[col].num[row]);
    return schema.columns[col].categories[static_cast<std::size_t>(cols[col].cat[row])];
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace fairtab
