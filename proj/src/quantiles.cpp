#include "quantiles.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace fairtab {

EmpiricalCdf EmpiricalCdf::from_sorted(const std::vector<double>& sorted) {
    if (sorted.empty()) throw DomainError("empirical cdf of an empty sample");
    EmpiricalCdf e;
    e.n_ = sorted.size();
    const double n = static_cast<double>(sorted.size());
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        // average 1-based rank of the tied block [i, j]
        const double mid_rank = (static_cast<double>(i + j)) / 2.0 + 1.0;
        e.support_.push_back(sorted[i]);
        e.cdf_.push_back((mid_rank - 0.5) / n);
        i = j + 1;
    }
    return e;
}

EmpiricalCdf EmpiricalCdf::from_values(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return from_sorted(values);
}

double EmpiricalCdf::value(double x) const {
    if (!std::isfinite(x)) throw DomainError("empirical cdf of a non-finite value");
    const double n = static_cast<double>(n_);
    if (x < support_.front()) return 0.5 / n;
    if (x > support_.back()) return 1.0 - 0.5 / n;
    auto it = std::lower_bound(support_.begin(), support_.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - support_.begin());
    if (support_[k] == x) return cdf_[k];
    // x lies strictly between support_[k-1] and support_[k]
    const double x0 = support_[k - 1], x1 = support_[k];
    const double f0 = cdf_[k - 1], f1 = cdf_[k];
    return f0 + (f1 - f0) * (x - x0) / (x1 - x0);
}

double EmpiricalCdf::quantile(double p) const {
    if (std::isnan(p)) throw DomainError("quantile of NaN");
    if (p <= cdf_.front()) return support_.front();
    if (p >= cdf_.back()) return support_.back();
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), p);
    const std::size_t k = static_cast<std::size_t>(it - cdf_.begin());
    if (cdf_[k] == p) return support_[k];
    const double f0 = cdf_[k - 1], f1 = cdf_[k];
    const double x0 = support_[k - 1], x1 = support_[k];
    return x0 + (x1 - x0) * (p - f0) / (f1 - f0);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("normal quantile needs p in (0,1)");
    // Beasley-Springer-Moro
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    if (p < plow) {
        const double q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p > phigh) {
        const double q = std::sqrt(-2 * std::log(1 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    const double q = p - 0.5, r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace fairtab
