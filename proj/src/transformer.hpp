#pragma once

#include <string>
#include <vector>

#include "quantiles.hpp"
#include "table.hpp"
#include "tensor.hpp"

namespace fairtab {

// Target marginal for transformed numeric columns. Uniform is the default: the
// transform is then just the empirical CDF and lands in [0,1]. Normal pipes
// the CDF through the standard normal quantile instead.
enum class OutputDist : std::uint8_t { Uniform, Normal };

// Reversible row encoding: numeric columns through their empirical CDFs into
// one block of width N_C, categorical columns as one-hot blocks of width l_i
// appended in schema order; total encoded width l_w = N_C + sum l_i.
class FittedTransformer {
  public:
    static FittedTransformer fit(const Table& table, OutputDist dist = OutputDist::Uniform);

    std::size_t width() const { return width_; }           // l_w
    std::size_t numeric_count() const { return numeric_cols_.size(); }  // N_C
    std::size_t categorical_count() const { return cat_cols_.size(); }  // N_D
    const std::vector<std::size_t>& cat_widths() const { return cat_widths_; }
    std::size_t cat_offset(std::size_t cat_slot) const { return cat_offsets_[cat_slot]; }
    const TableSchema& schema() const { return schema_; }
    OutputDist output_dist() const { return dist_; }

    // slot indexes run over numeric (resp. categorical) columns in schema order
    double transform_numeric(std::size_t numeric_slot, double x) const;
    double inverse_numeric(std::size_t numeric_slot, double p) const;
    const EmpiricalCdf& numeric_cdf(std::size_t numeric_slot) const {
        return numeric_cdfs_[numeric_slot];
    }

    Tensor encode(const Table& table) const;
    Table decode(const Tensor& batch) const;

    // Encoded positions of the fairness one-hot coordinates (for the phase-II
    // generator loss). Throws ConfigError when the schema has no designations.
    struct FairnessBlocks {
        std::size_t unpriv_col;     // protected block, underprivileged coordinate
        std::size_t priv_col;       // protected block, privileged coordinate
        std::size_t favorable_col;  // label block, favorable coordinate
    };
    FairnessBlocks fairness_blocks() const;

    void save(const std::string& path, const std::string& meta = "") const;
    static FittedTransformer load(const std::string& path, std::string* meta = nullptr);

  private:
    TableSchema schema_;
    OutputDist dist_ = OutputDist::Uniform;
    std::vector<std::size_t> numeric_cols_;  // schema column index per numeric slot
    std::vector<std::size_t> cat_cols_;      // schema column index per categorical slot
    std::vector<EmpiricalCdf> numeric_cdfs_;
    std::vector<std::vector<double>> numeric_sorted_;  // persisted supports
    std::vector<std::size_t> cat_widths_;
    std::vector<std::size_t> cat_offsets_;
    std::size_t width_ = 0;

    void build_layout();
};

}  // namespace fairtab
