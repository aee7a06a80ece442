#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "rng.hpp"
#include "tensor.hpp"

namespace fairtab {

enum class OpKind : std::uint8_t {
    Leaf,
    MatMul,
    Add,
    Sub,
    Mul,
    Div,
    Scale,        // multiply by a compile-time scalar (attrs.scalar)
    Relu,
    LeakyRelu,    // attrs.scalar = negative slope
    SoftmaxTemp,  // attrs.scalar = temperature, per-row over the last axis
    Log,
    Exp,
    Square,
    Sqrt,
    Transpose,
    Concat,       // attrs.axis
    Slice,        // attrs.axis, [attrs.begin, attrs.end)
    Sum,          // attrs.axis: -1 = all (scalar), 0 = over rows, 1 = over cols
    Mean,         // full reduction only
    RowL2Norm,    // composite: sqrt(row-sum of squares); kept as an apply() kind
};

struct OpAttrs {
    double scalar = 0.0;
    int axis = -1;
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct Node;
using NodePtr = std::shared_ptr<Node>;

// One vertex of the computation graph. The value is computed eagerly when the
// node is built; grad propagation happens in backward(). Nodes are immutable
// after construction except for leaf parameter values, which the optimizer
// rewrites between graph builds.
struct Node : std::enable_shared_from_this<Node> {
    Tensor value;
    OpKind op = OpKind::Leaf;
    OpAttrs attrs;
    std::vector<NodePtr> parents;
    bool requires_grad = false;
};

NodePtr leaf(Tensor value, bool requires_grad = false);
// Leaf that never receives gradients.
NodePtr constant(Tensor value);
inline NodePtr constant(double v) { return constant(Tensor::scalar(v)); }
// Cut the node out of the graph: same value, no parents, no grad.
NodePtr detach(const NodePtr& n);

// Generic dispatcher; the named builders below all route through it.
NodePtr apply(OpKind op, const std::vector<NodePtr>& inputs, const OpAttrs& attrs = {});

NodePtr matmul(const NodePtr& a, const NodePtr& b);
NodePtr add(const NodePtr& a, const NodePtr& b);
NodePtr sub(const NodePtr& a, const NodePtr& b);
NodePtr mul(const NodePtr& a, const NodePtr& b);
NodePtr div(const NodePtr& a, const NodePtr& b);
NodePtr scale(const NodePtr& a, double c);
NodePtr relu(const NodePtr& a);
NodePtr leaky_relu(const NodePtr& a, double slope);
NodePtr softmax_temp(const NodePtr& a, double tau);
NodePtr log(const NodePtr& a);
NodePtr exp(const NodePtr& a);
NodePtr square(const NodePtr& a);
NodePtr sqrt(const NodePtr& a);
NodePtr transpose(const NodePtr& a);
NodePtr concat(const std::vector<NodePtr>& parts, int axis);
NodePtr slice(const NodePtr& a, int axis, std::size_t begin, std::size_t end);
NodePtr sum(const NodePtr& a, int axis = -1);
NodePtr mean(const NodePtr& a);
NodePtr row_l2_norm(const NodePtr& a);

using GradMap = std::unordered_map<const Node*, NodePtr>;

// Reverse-mode differentiation of a scalar root. Local gradients are built
// with the op vocabulary above, so the returned gradients are themselves
// differentiable graphs; a second backward() through them is valid. There is
// no separate second-order path.
//
// `wrt`, when non-empty, restricts propagation to ancestors of those nodes
// (they need not be leaves). When empty, gradients are produced for every
// reachable leaf with requires_grad set.
//
// When `create_graph` is false the returned gradients are detached from the
// internal expression graph; values are identical either way.
GradMap backward(const NodePtr& root, bool create_graph = false,
                 const std::vector<NodePtr>& wrt = {});

// Tensor of i.i.d. standard Gumbel noise.
Tensor gumbel_noise(const std::vector<std::size_t>& shape, Rng& rng);
// Tensor of i.i.d. standard normal draws.
Tensor normal_noise(const std::vector<std::size_t>& shape, Rng& rng);

}  // namespace fairtab
