#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "support/oracles.hpp"

namespace fairtab::test {

// Rebuilds the graph from scratch for every perturbed evaluation, so the
// check is independent of any state the backward pass might carry.
struct GradCheckResult {
    double max_rel_err = 0.0;
    std::string where;
};

inline GradCheckResult gradcheck(const std::function<NodePtr()>& build,
                                 const std::vector<NodePtr>& leaves, double h = 1e-5) {
    GradCheckResult res;
    NodePtr root = build();
    GradMap grads = backward(root, /*create_graph=*/false, leaves);
    for (std::size_t li = 0; li < leaves.size(); ++li) {
        const NodePtr& leafn = leaves[li];
        const Tensor analytic = grads.at(leafn.get())->value;
        for (std::size_t i = 0; i < leafn->value.size(); ++i) {
            const double fd = central_diff([&] { return build()->value[0]; },
                                           leafn->value[i], h);
            const double re = rel_err(analytic[i], fd);
            if (re > res.max_rel_err) {
                res.max_rel_err = re;
                res.where = "leaf " + std::to_string(li) + " element " + std::to_string(i);
            }
        }
    }
    return res;
}

inline Tensor random_tensor(std::vector<std::size_t> shape, Rng& rng, double lo = -2.0,
                            double hi = 2.0) {
    Tensor t(std::move(shape));
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.uniform(lo, hi);
    return t;
}

}  // namespace fairtab::test
