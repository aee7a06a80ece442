#include "transformer.hpp"

#include <algorithm>
#include <cmath>

#include "binio.hpp"
#include "errors.hpp"

namespace fairtab {

namespace {
constexpr std::uint32_t kMagic = 0x46545452;  // "FTTR"
constexpr std::uint32_t kVersion = 1;
}  // namespace

FittedTransformer FittedTransformer::fit(const Table& table, OutputDist dist) {
    if (table.rows() == 0) throw SchemaError("cannot fit a transformer on an empty table");
    table.schema.validate();
    FittedTransformer ft;
    ft.schema_ = table.schema;
    ft.dist_ = dist;
    for (std::size_t c = 0; c < table.schema.columns.size(); ++c) {
        const ColumnSpec& spec = table.schema.columns[c];
        if (spec.kind == ColumnKind::Numeric) {
            std::vector<double> sorted = table.cols[c].num;
            for (double v : sorted)
                if (!std::isfinite(v))
                    throw DomainError("non-finite value in numeric column '" + spec.name + "'");
            std::sort(sorted.begin(), sorted.end());
            ft.numeric_cols_.push_back(c);
            ft.numeric_cdfs_.push_back(EmpiricalCdf::from_sorted(sorted));
            ft.numeric_sorted_.push_back(std::move(sorted));
        } else {
            if (spec.categories.empty())
                throw SchemaError("categorical column '" + spec.name + "' has no vocabulary");
            ft.cat_cols_.push_back(c);
            ft.cat_widths_.push_back(spec.categories.size());
        }
    }
    ft.build_layout();
    return ft;
}

void FittedTransformer::build_layout() {
    width_ = numeric_cols_.size();
    cat_offsets_.clear();
    for (std::size_t w : cat_widths_) {
        cat_offsets_.push_back(width_);
        width_ += w;
    }
}

double FittedTransformer::transform_numeric(std::size_t numeric_slot, double x) const {
    const double p = numeric_cdfs_[numeric_slot].value(x);
    return dist_ == OutputDist::Uniform ? p : normal_quantile(p);
}

double FittedTransformer::inverse_numeric(std::size_t numeric_slot, double p) const {
    if (dist_ == OutputDist::Normal) p = normal_cdf(p);
    return numeric_cdfs_[numeric_slot].quantile(p);
}

Tensor FittedTransformer::encode(const Table& table) const {
    if (table.schema.columns.size() != schema_.columns.size())
        throw SchemaError("encode: table does not match the fitted schema");
    const std::size_t n = table.rows();
    Tensor out({n, width_});
    for (std::size_t s = 0; s < numeric_cols_.size(); ++s) {
        const auto& vals = table.cols[numeric_cols_[s]].num;
        for (std::size_t r = 0; r < n; ++r) out.at(r, s) = transform_numeric(s, vals[r]);
    }
    for (std::size_t s = 0; s < cat_cols_.size(); ++s) {
        const auto& codes = table.cols[cat_cols_[s]].cat;
        const std::size_t off = cat_offsets_[s];
        for (std::size_t r = 0; r < n; ++r) {
            const auto code = codes[r];
            if (code < 0 || static_cast<std::size_t>(code) >= cat_widths_[s])
                throw SchemaError("encode: category code out of range");
            out.at(r, off + static_cast<std::size_t>(code)) = 1.0;
        }
    }
    return out;
}

Table FittedTransformer::decode(const Tensor& batch) const {
    if (batch.rank() != 2 || batch.dim(1) != width_)
        throw DimensionError("decode: batch width " +
                             (batch.rank() == 2 ? std::to_string(batch.dim(1)) : batch.shape_str()) +
                             " does not match l_w = " + std::to_string(width_));
    const std::size_t n = batch.dim(0);
    Table t = Table::with_schema(schema_);
    for (std::size_t s = 0; s < numeric_cols_.size(); ++s) {
        auto& dst = t.cols[numeric_cols_[s]].num;
        dst.resize(n);
        for (std::size_t r = 0; r < n; ++r) dst[r] = inverse_numeric(s, batch.at(r, s));
    }
    for (std::size_t s = 0; s < cat_cols_.size(); ++s) {
        auto& dst = t.cols[cat_cols_[s]].cat;
        dst.resize(n);
        const std::size_t off = cat_offsets_[s], w = cat_widths_[s];
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t best = 0;
            for (std::size_t j = 1; j < w; ++j)
                if (batch.at(r, off + j) > batch.at(r, off + best)) best = j;
            dst[r] = static_cast<std::int32_t>(best);
        }
    }
    return t;
}

FittedTransformer::FairnessBlocks FittedTransformer::fairness_blocks() const {
    if (!schema_.has_fairness())
        throw ConfigError("schema does not designate protected and label columns");
    FairnessBlocks fb{};
    const std::size_t s_col = schema_.column_index(schema_.protected_column);
    const std::size_t y_col = schema_.column_index(schema_.label_column);
    bool found_s = false, found_y = false;
    for (std::size_t s = 0; s < cat_cols_.size(); ++s) {
        if (cat_cols_[s] == s_col) {
            const auto code = schema_.category_code(s_col, schema_.underprivileged_value);
            fb.unpriv_col = cat_offsets_[s] + static_cast<std::size_t>(code);
            fb.priv_col = cat_offsets_[s] + static_cast<std::size_t>(1 - code);
            found_s = true;
        }
        if (cat_cols_[s] == y_col) {
            const auto code = schema_.category_code(y_col, schema_.favorable_value);
            fb.favorable_col = cat_offsets_[s] + static_cast<std::size_t>(code);
            found_y = true;
        }
    }
    if (!found_s || !found_y)
        throw ConfigError("protected/label columns are not categorical blocks");
    return fb;
}

void FittedTransformer::save(const std::string& path, const std::string& meta) const {
    BinWriter w(path);
    w.u32(kMagic);
    w.u32(kVersion);
    w.str(meta);
    w.u8(static_cast<std::uint8_t>(dist_));
    w.u32(static_cast<std::uint32_t>(schema_.columns.size()));
    for (const ColumnSpec& c : schema_.columns) {
        w.str(c.name);
        w.u8(static_cast<std::uint8_t>(c.kind));
        w.u32(static_cast<std::uint32_t>(c.categories.size()));
        for (const std::string& cat : c.categories) w.str(cat);
    }
    w.str(schema_.protected_column);
    w.str(schema_.underprivileged_value);
    w.str(schema_.label_column);
    w.str(schema_.favorable_value);
    w.u32(static_cast<std::uint32_t>(numeric_sorted_.size()));
    for (const auto& v : numeric_sorted_) w.f64s(v);
    w.done();
}

FittedTransformer FittedTransformer::load(const std::string& path, std::string* meta) {
    BinReader r(path);
    if (r.u32() != kMagic) throw IoError("'" + path + "' is not a transformer file");
    if (r.u32() != kVersion) throw IoError("'" + path + "': unsupported transformer version");
    const std::string m = r.str();
    if (meta) *meta = m;
    FittedTransformer ft;
    ft.dist_ = static_cast<OutputDist>(r.u8());
    const std::uint32_t ncols = r.u32();
    for (std::uint32_t i = 0; i < ncols; ++i) {
        ColumnSpec c;
        c.name = r.str();
        c.kind = static_cast<ColumnKind>(r.u8());
        const std::uint32_t ncat = r.u32();
        for (std::uint32_t j = 0; j < ncat; ++j) c.categories.push_back(r.str());
        ft.schema_.columns.push_back(std::move(c));
    }
    ft.schema_.protected_column = r.str();
    ft.schema_.underprivileged_value = r.str();
    ft.schema_.label_column = r.str();
    ft.schema_.favorable_value = r.str();
    const std::uint32_t nnum = r.u32();
    for (std::uint32_t i = 0; i < nnum; ++i) {
        ft.numeric_sorted_.push_back(r.f64s());
        ft.numeric_cdfs_.push_back(EmpiricalCdf::from_sorted(ft.numeric_sorted_.back()));
    }
    std::size_t slot = 0;
    for (std::size_t c = 0; c < ft.schema_.columns.size(); ++c) {
        if (ft.schema_.columns[c].kind == ColumnKind::Numeric) {
            ft.numeric_cols_.push_back(c);
            ++slot;
        } else {
            ft.cat_cols_.push_back(c);
            ft.cat_widths_.push_back(ft.schema_.columns[c].categories.size());
        }
    }
    if (slot != ft.numeric_sorted_.size())
        throw IoError("'" + path + "': numeric column count mismatch");
    ft.build_layout();
    return ft;
}

}  // namespace fairtab
