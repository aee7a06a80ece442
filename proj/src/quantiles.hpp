#pragma once

#include <vector>

namespace fairtab {

// Empirical distribution of one numeric column. The CDF uses midpoint ranks,
// F = (r - 0.5)/n, with tied values collapsed onto the average rank of the
// tied block, linear interpolation between distinct values and clamping to
// [0.5/n, 1 - 0.5/n] outside the observed range. The quantile function is the
// exact piecewise-linear inverse, so value() -> quantile() round-trips every
// support point. The same convention backs both the data transformer and the
// disparate-impact repair.
class EmpiricalCdf {
  public:
    static EmpiricalCdf from_sorted(const std::vector<double>& sorted);
    static EmpiricalCdf from_values(std::vector<double> values);  // sorts a copy

    double value(double x) const;     // F(x)
    double quantile(double p) const;  // F^{-1}(p), p clamped into [0, 1]

    const std::vector<double>& support() const { return support_; }
    double min() const { return support_.front(); }
    double max() const { return support_.back(); }
    std::size_t count() const { return n_; }

  private:
    std::vector<double> support_;  // distinct sorted values
    std::vector<double> cdf_;      // midrank F per support point, strictly increasing
    std::size_t n_ = 0;
};

// Quantile of the standard normal (Beasley-Springer-Moro rational
// approximation), used when the transformer targets a normal output
// distribution instead of the default uniform.
double normal_quantile(double p);
double normal_cdf(double x);

}  // namespace fairtab
