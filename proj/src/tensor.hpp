#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fairtab {

// Dense row-major tensor of doubles. Rank 0 (scalar), 1 and 2 are supported;
// that is all the networks and losses need.
class Tensor {
  public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);

    static Tensor scalar(double v);
    static Tensor full(std::vector<std::size_t> shape, double v);
    static Tensor zeros_like(const Tensor& t) { return Tensor(t.shape()); }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    std::size_t dim(std::size_t i) const { return shape_[i]; }

    // Rows/cols of the effective 2-D view: scalar -> 1x1, vector n -> 1xn.
    std::size_t rows() const;
    std::size_t cols() const;

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
    bool all_finite() const;

    std::string shape_str() const;

  private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

namespace kernels {

// C(m x n) = A(m x k) * B(k x n), row-major. Deterministic accumulation order.
void matmul(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
            std::size_t n);

}  // namespace kernels

}  // namespace fairtab
