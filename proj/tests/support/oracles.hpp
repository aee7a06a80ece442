#pragma once

// Independent oracles used by the unit and acceptance suites. Everything here
// is deliberately naive (triple loops, counting, central differences) and must
// stay decoupled from the implementation paths it checks.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "tensor.hpp"

namespace fairtab::test {

// Naive triple-loop matrix product.
inline Tensor naive_matmul(const Tensor& a, const Tensor& b) {
    Tensor out({a.dim(0), b.dim(1)});
    for (std::size_t i = 0; i < a.dim(0); ++i)
        for (std::size_t j = 0; j < b.dim(1); ++j) {
            double acc = 0.0;
            for (std::size_t l = 0; l < a.dim(1); ++l) acc += a.at(i, l) * b.at(l, j);
            out.at(i, j) = acc;
        }
    return out;
}

// Central finite difference of f with respect to x[i].
inline double central_diff(const std::function<double()>& f, double& xi, double h = 1e-5) {
    const double saved = xi;
    xi = saved + h;
    const double fp = f();
    xi = saved - h;
    const double fm = f();
    xi = saved;
    return (fp - fm) / (2.0 * h);
}

inline double rel_err(double got, double want) {
    const double denom = std::max({std::fabs(got), std::fabs(want), 1e-8});
    return std::fabs(got - want) / denom;
}

// Counting-form discrimination score over binary vectors: 1 marks the
// privileged group / favorable label.
inline double counting_ds(const std::vector<int>& s, const std::vector<int>& y) {
    double n1 = 0, f1 = 0, n0 = 0, f0 = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i]) {
            n1 += 1;
            f1 += y[i];
        } else {
            n0 += 1;
            f0 += y[i];
        }
    }
    return f1 / n1 - f0 / n0;
}

// Two-sample Kolmogorov-Smirnov distance.
inline double ks_distance(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        const double fa = static_cast<double>(i) / a.size();
        const double fb = static_cast<double>(j) / b.size();
        d = std::max(d, std::fabs(fa - fb));
    }
    return d;
}

// Spearman rank correlation (no tie handling beyond averaging is needed for
// the small grids it is used on).
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (v[j] < v[i]) r[i] += 1.0;
                else if (v[j] == v[i] && j < i) r[i] += 1.0;
            }
        return r;
    };
    const std::vector<double> rx = ranks(x), ry = ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double num = 0, dx = 0, dy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (rx[i] - mx) * (ry[i] - my);
        dx += (rx[i] - mx) * (rx[i] - mx);
        dy += (ry[i] - my) * (ry[i] - my);
    }
    return num / std::sqrt(dx * dy);
}

}  // namespace fairtab::test
