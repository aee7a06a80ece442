#include "csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace fairtab {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (std::isspace(static_cast<unsigned char>(s[b])))) ++b;
    while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])))) --e;
    if (e - b >= 2 && s[b] == '"' && s[e - 1] == '"') {
        ++b;
        --e;
    }
    return s.substr(b, e - b);
}

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            cell.push_back(ch);
        } else if (ch == delimiter && !quoted) {
            out.push_back(trim(cell));
            cell.clear();
        } else {
            cell.push_back(ch);
        }
    }
    out.push_back(trim(cell));
    return out;
}

}  // namespace

int CsvData::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvData read_csv(const std::string& path, char delimiter) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    CsvData data;
    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path + "' is empty (no header row)");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    data.header = split_line(line, delimiter);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells = split_line(line, delimiter);
        if (cells.size() != data.header.size())
            throw IoError("'" + path + "' row " + std::to_string(data.rows.size() + 2) +
                          " has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(data.header.size()));
        data.rows.push_back(std::move(cells));
    }
    return data;
}

Table read_table_csv(const std::string& path, const TableSchema& schema, char delimiter) {
    const CsvData raw = read_csv(path, delimiter);
    std::vector<int> src(schema.columns.size());
    for (std::size_t c = 0; c < schema.columns.size(); ++c) {
        src[c] = raw.column(schema.columns[c].name);
        if (src[c] < 0)
            throw SchemaError("'" + path + "' is missing column '" + schema.columns[c].name +
                              "'");
    }
    Table t = Table::with_schema(schema);
    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        for (std::size_t c = 0; c < schema.columns.size(); ++c) {
            const std::string& cell = raw.rows[r][static_cast<std::size_t>(src[c])];
            if (schema.columns[c].kind == ColumnKind::Numeric) {
                errno = 0;
                char* end = nullptr;
                const double v = std::strtod(cell.c_str(), &end);
                if (end == cell.c_str() || *end != '\0' || errno == ERANGE)
                    throw SchemaError("cannot parse '" + cell + "' as a number in column '" +
                                      schema.columns[c].name + "'");
                t.cols[c].num.push_back(v);
            } else {
                const std::int32_t code = schema.category_code(c, cell);
                if (code < 0)
                    throw SchemaError("value '" + cell + "' not in the vocabulary of column '" +
                                      schema.columns[c].name + "'");
                t.cols[c].cat.push_back(code);
            }
        }
    }
    return t;
}

void write_table_csv(const Table& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    for (std::size_t c = 0; c < table.schema.columns.size(); ++c)
        out << (c ? "," : "") << table.schema.columns[c].name;
    out << '\n';
    const std::size_t n = table.rows();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < table.schema.columns.size(); ++c)
            out << (c ? "," : "") << table.cell_text(r, c);
        out << '\n';
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace fairtab
