#include "adam.hpp"

#include <cmath>

#include "errors.hpp"

namespace fairtab {

Adam::Adam(const std::vector<NodePtr>& params, AdamConfig cfg) : cfg_(cfg) {
    m_.reserve(params.size());
    v_.reserve(params.size());
    for (const NodePtr& p : params) {
        m_.emplace_back(p->value.shape());
        v_.emplace_back(p->value.shape());
    }
}

void Adam::step(const std::vector<NodePtr>& params, const std::vector<Tensor>& grads) {
    if (params.size() != m_.size() || grads.size() != m_.size())
        throw DimensionError("adam: parameter/gradient count mismatch");
    ++step_count_;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(step_count_));
    const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(step_count_));
    for (std::size_t i = 0; i < params.size(); ++i) {
        Tensor& p = params[i]->value;
        const Tensor& g = grads[i];
        if (!p.same_shape(g))
            throw DimensionError("adam: gradient shape " + g.shape_str() +
                                 " does not match parameter shape " + p.shape_str());
        Tensor& m = m_[i];
        Tensor& v = v_[i];
        for (std::size_t j = 0; j < p.size(); ++j) {
            m[j] = cfg_.beta1 * m[j] + (1.0 - cfg_.beta1) * g[j];
            v[j] = cfg_.beta2 * v[j] + (1.0 - cfg_.beta2) * g[j] * g[j];
            const double mhat = m[j] / bc1;
            const double vhat = v[j] / bc2;
            p[j] -= cfg_.alpha * mhat / (std::sqrt(vhat) + cfg_.eps);
        }
    }
}

}  // namespace fairtab
