#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace fairtab {

struct AdamConfig {
    double alpha = 0.0002;
    double beta1 = 0.5;
    double beta2 = 0.999;
    double eps = 1e-8;
};

// Bias-corrected Adam over a fixed list of leaf parameter nodes. Parameter
// values are rewritten in place between graph builds; moment tensors mirror
// the parameter shapes.
class Adam {
  public:
    Adam(const std::vector<NodePtr>& params, AdamConfig cfg = {});

    // grads[i] pairs with params[i]; both must match the shapes given at
    // construction. Increments the step count by exactly 1.
    void step(const std::vector<NodePtr>& params, const std::vector<Tensor>& grads);

    std::int64_t step_count() const { return step_count_; }
    const AdamConfig& config() const { return cfg_; }
    const Tensor& first_moment(std::size_t i) const { return m_[i]; }
    const Tensor& second_moment(std::size_t i) const { return v_[i]; }

  private:
    AdamConfig cfg_;
    std::int64_t step_count_ = 0;
    std::vector<Tensor> m_;
    std::vector<Tensor> v_;
};

}  // namespace fairtab
