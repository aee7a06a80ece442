#pragma once

#include <string>
#include <vector>

#include "rng.hpp"
#include "table.hpp"

namespace fairtab::test {

// Small helper for assembling tables column by column in tests.
struct TableBuilder {
    TableSchema schema;
    std::vector<Column> cols;

    TableBuilder& numeric(const std::string& name, std::vector<double> values) {
        schema.columns.push_back({name, ColumnKind::Numeric, {}});
        Column c;
        c.num = std::move(values);
        cols.push_back(std::move(c));
        return *this;
    }

    TableBuilder& categorical(const std::string& name, std::vector<std::string> vocab,
                              std::vector<std::int32_t> codes) {
        schema.columns.push_back({name, ColumnKind::Categorical, std::move(vocab)});
        Column c;
        c.cat = std::move(codes);
        cols.push_back(std::move(c));
        return *this;
    }

    TableBuilder& fairness(const std::string& s_col, const std::string& unpriv,
                           const std::string& y_col, const std::string& fav) {
        schema.protected_column = s_col;
        schema.underprivileged_value = unpriv;
        schema.label_column = y_col;
        schema.favorable_value = fav;
        return *this;
    }

    Table build() const {
        Table t;
        t.schema = schema;
        t.cols = cols;
        return t;
    }
};

// Biased toy dataset: binary protected attribute `group` (u = underprivileged),
// binary label `outcome` (yes = favorable), one extra categorical and two
// numeric features. Counts are chosen exactly so the discrimination score of
// the table equals `ds` when both groups have `per_group` rows.
Table make_biased_toy(std::size_t per_group, double ds, std::uint64_t seed);

}  // namespace fairtab::test
