#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "errors.hpp"

namespace fairtab {

namespace {

struct Dims {
    std::size_t r, c;
};

// Effective 2-D view: scalar -> 1x1, vector n -> 1xn.
Dims eff(const Tensor& t) {
    switch (t.rank()) {
        case 0: return {1, 1};
        case 1: return {1, t.dim(0)};
        default: return {t.dim(0), t.dim(1)};
    }
}

// Broadcasting is restricted to the shapes the nets and losses actually use:
// same shape, a rank-0 scalar against anything, or rank-2 against a (1,n) row
// or (m,1) column. Rank-1 operands only combine with identical shapes.
void check_broadcast(const Tensor& a, const Tensor& b, const char* opname) {
    if (a.same_shape(b)) return;
    if (a.rank() == 0 || b.rank() == 0) return;
    if (a.rank() == 2 && b.rank() == 2) {
        const Dims da = eff(a), db = eff(b);
        const bool rows_ok = da.r == db.r || da.r == 1 || db.r == 1;
        const bool cols_ok = da.c == db.c || da.c == 1 || db.c == 1;
        const bool degenerate = (da.r == 1 && da.c == 1) || (db.r == 1 && db.c == 1);
        if (rows_ok && cols_ok && !degenerate) return;
    }
    throw DimensionError(std::string(opname) + ": cannot broadcast " + a.shape_str() +
                         " with " + b.shape_str());
}

template <typename F>
Tensor binary_elementwise(const Tensor& a, const Tensor& b, F f, const char* opname) {
    check_broadcast(a, b, opname);
    if (a.same_shape(b)) {
        Tensor out(a.shape());
        const double* pa = a.data();
        const double* pb = b.data();
        double* po = out.data();
        for (std::size_t i = 0; i < a.size(); ++i) po[i] = f(pa[i], pb[i]);
        return out;
    }
    const Dims da = eff(a), db = eff(b);
    const std::size_t R = std::max(da.r, db.r);
    const std::size_t C = std::max(da.c, db.c);
    std::vector<std::size_t> out_shape;
    if (da.r == R && da.c == C) out_shape = a.shape();
    else if (db.r == R && db.c == C) out_shape = b.shape();
    else out_shape = {R, C};
    Tensor out(out_shape);
    double* po = out.data();
    const double* pa = a.data();
    const double* pb = b.data();
    for (std::size_t i = 0; i < R; ++i) {
        const std::size_t ia = (da.r == 1 ? 0 : i) * da.c;
        const std::size_t ib = (db.r == 1 ? 0 : i) * db.c;
        for (std::size_t j = 0; j < C; ++j)
            po[i * C + j] = f(pa[ia + (da.c == 1 ? 0 : j)], pb[ib + (db.c == 1 ? 0 : j)]);
    }
    return out;
}

template <typename F>
Tensor unary_elementwise(const Tensor& a, F f) {
    Tensor out(a.shape());
    const double* pa = a.data();
    double* po = out.data();
    for (std::size_t i = 0; i < a.size(); ++i) po[i] = f(pa[i]);
    return out;
}

Tensor matmul_value(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2)
        throw DimensionError("matmul: both operands must be rank 2, got " + a.shape_str() +
                             " and " + b.shape_str());
    if (a.dim(1) != b.dim(0))
        throw DimensionError("matmul: inner dimensions disagree, " + a.shape_str() + " vs " +
                             b.shape_str());
    Tensor out({a.dim(0), b.dim(1)});
    kernels::matmul(a.data(), b.data(), out.data(), a.dim(0), a.dim(1), b.dim(1));
    return out;
}

Tensor softmax_value(const Tensor& a, double tau) {
    if (a.rank() != 2) throw DimensionError("softmax_temp: input must be rank 2");
    if (!(tau > 0.0)) throw DomainError("softmax_temp: temperature must be positive");
    Tensor out(a.shape());
    const std::size_t m = a.dim(0), n = a.dim(1);
    for (std::size_t i = 0; i < m; ++i) {
        const double* row = a.data() + i * n;
        double* orow = out.data() + i * n;
        double mx = row[0];
        for (std::size_t j = 1; j < n; ++j) mx = std::max(mx, row[j]);
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            orow[j] = std::exp((row[j] - mx) / tau);
            total += orow[j];
        }
        for (std::size_t j = 0; j < n; ++j) orow[j] /= total;
    }
    return out;
}

Tensor transpose_value(const Tensor& a) {
    if (a.rank() != 2) throw DimensionError("transpose: input must be rank 2");
    Tensor out({a.dim(1), a.dim(0)});
    for (std::size_t i = 0; i < a.dim(0); ++i)
        for (std::size_t j = 0; j < a.dim(1); ++j) out.at(j, i) = a.at(i, j);
    return out;
}

Tensor concat_value(const std::vector<NodePtr>& parts, int axis) {
    if (parts.empty()) throw DimensionError("concat: no inputs");
    if (axis != 0 && axis != 1) throw DimensionError("concat: axis must be 0 or 1");
    const std::size_t other = axis == 0 ? 1 : 0;
    std::size_t along = 0;
    const Tensor& first = parts[0]->value;
    if (first.rank() != 2) throw DimensionError("concat: inputs must be rank 2");
    for (const NodePtr& p : parts) {
        if (p->value.rank() != 2) throw DimensionError("concat: inputs must be rank 2");
        if (p->value.dim(other) != first.dim(other))
            throw DimensionError("concat: inputs disagree on the non-concat dimension");
        along += p->value.dim(axis);
    }
    std::vector<std::size_t> shape{0, 0};
    shape[axis] = along;
    shape[other] = first.dim(other);
    Tensor out(shape);
    if (axis == 1) {
        std::size_t off = 0;
        for (const NodePtr& p : parts) {
            const Tensor& t = p->value;
            for (std::size_t i = 0; i < t.dim(0); ++i)
                std::copy(t.data() + i * t.dim(1), t.data() + (i + 1) * t.dim(1),
                          out.data() + i * along + off);
            off += t.dim(1);
        }
    } else {
        std::size_t off = 0;
        for (const NodePtr& p : parts) {
            const Tensor& t = p->value;
            std::copy(t.data(), t.data() + t.size(), out.data() + off * first.dim(1));
            off += t.dim(0);
        }
    }
    return out;
}

Tensor slice_value(const Tensor& a, int axis, std::size_t begin, std::size_t end) {
    if (a.rank() != 2) throw DimensionError("slice: input must be rank 2");
    if (axis != 0 && axis != 1) throw DimensionError("slice: axis must be 0 or 1");
    if (begin >= end || end > a.dim(static_cast<std::size_t>(axis)))
        throw DimensionError("slice: invalid range");
    if (axis == 1) {
        Tensor out({a.dim(0), end - begin});
        for (std::size_t i = 0; i < a.dim(0); ++i)
            std::copy(a.data() + i * a.dim(1) + begin, a.data() + i * a.dim(1) + end,
                      out.data() + i * (end - begin));
        return out;
    }
    Tensor out({end - begin, a.dim(1)});
    std::copy(a.data() + begin * a.dim(1), a.data() + end * a.dim(1), out.data());
    return out;
}

Tensor sum_value(const Tensor& a, int axis) {
    if (axis == -1) {
        double total = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) total += a[i];
        return Tensor::scalar(total);
    }
    if (a.rank() != 2) throw DimensionError("sum: axis reduction needs a rank-2 input");
    if (axis == 0) {
        Tensor out({1, a.dim(1)});
        for (std::size_t i = 0; i < a.dim(0); ++i)
            for (std::size_t j = 0; j < a.dim(1); ++j) out[j] += a.at(i, j);
        return out;
    }
    if (axis == 1) {
        Tensor out({a.dim(0), 1});
        for (std::size_t i = 0; i < a.dim(0); ++i) {
            double total = 0.0;
            for (std::size_t j = 0; j < a.dim(1); ++j) total += a.at(i, j);
            out[i] = total;
        }
        return out;
    }
    throw DimensionError("sum: axis must be -1, 0 or 1");
}

NodePtr make_node(Tensor value, OpKind op, OpAttrs attrs, std::vector<NodePtr> parents) {
    auto n = std::make_shared<Node>();
    n->value = std::move(value);
    n->op = op;
    n->attrs = attrs;
    n->parents = std::move(parents);
    for (const NodePtr& p : n->parents)
        if (p->requires_grad) {
            n->requires_grad = true;
            break;
        }
    return n;
}

}  // namespace

NodePtr leaf(Tensor value, bool requires_grad) {
    auto n = std::make_shared<Node>();
    n->value = std::move(value);
    n->requires_grad = requires_grad;
    return n;
}

NodePtr constant(Tensor value) { return leaf(std::move(value), false); }

NodePtr detach(const NodePtr& n) { return constant(n->value); }

NodePtr apply(OpKind op, const std::vector<NodePtr>& inputs, const OpAttrs& attrs) {
    auto want = [&](std::size_t k) {
        if (inputs.size() != k)
            throw DimensionError("apply: wrong number of inputs for op");
    };
    switch (op) {
        case OpKind::Leaf:
            throw ContractError("apply: cannot apply a leaf; use leaf()/constant()");
        case OpKind::MatMul:
            want(2);
            return make_node(matmul_value(inputs[0]->value, inputs[1]->value), op, attrs,
                             {inputs[0], inputs[1]});
        case OpKind::Add:
            want(2);
            return make_node(binary_elementwise(
                                 inputs[0]->value, inputs[1]->value,
                                 [](double x, double y) { return x + y; }, "add"),
                             op, attrs, {inputs[0], inputs[1]});
        case OpKind::Sub:
            want(2);
            return make_node(binary_elementwise(
                                 inputs[0]->value, inputs[1]->value,
                                 [](double x, double y) { return x - y; }, "sub"),
                             op, attrs, {inputs[0], inputs[1]});
        case OpKind::Mul:
            want(2);
            return make_node(binary_elementwise(
                                 inputs[0]->value, inputs[1]->value,
                                 [](double x, double y) { return x * y; }, "mul"),
                             op, attrs, {inputs[0], inputs[1]});
        case OpKind::Div:
            want(2);
            return make_node(binary_elementwise(
                                 inputs[0]->value, inputs[1]->value,
                                 [](double x, double y) { return x / y; }, "div"),
                             op, attrs, {inputs[0], inputs[1]});
        case OpKind::Scale:
            want(1);
            return make_node(unary_elementwise(inputs[0]->value,
                                               [&](double x) { return attrs.scalar * x; }),
                             op, attrs, {inputs[0]});
        case OpKind::Relu:
            want(1);
            return make_node(
                unary_elementwise(inputs[0]->value, [](double x) { return x > 0.0 ? x : 0.0; }),
                op, attrs, {inputs[0]});
        case OpKind::LeakyRelu:
            want(1);
            return make_node(unary_elementwise(inputs[0]->value,
                                               [&](double x) {
                                                   return x > 0.0 ? x : attrs.scalar * x;
                                               }),
                             op, attrs, {inputs[0]});
        case OpKind::SoftmaxTemp:
            want(1);
            return make_node(softmax_value(inputs[0]->value, attrs.scalar), op, attrs,
                             {inputs[0]});
        case OpKind::Log:
            want(1);
            return make_node(unary_elementwise(inputs[0]->value,
                                               [](double x) {
                                                   if (x <= 0.0)
                                                       throw DomainError(
                                                           "log: input must be positive");
                                                   return std::log(x);
                                               }),
                             op, attrs, {inputs[0]});
        case OpKind::Exp:
            want(1);
            return make_node(unary_elementwise(inputs[0]->value,
                                               [](double x) { return std::exp(x); }),
                             op, attrs, {inputs[0]});
        case OpKind::Square:
            want(1);
            return make_node(unary_elementwise(inputs[0]->value,
                                               [](double x) { return x * x; }),
                             op, attrs, {inputs[0]});
        case OpKind::Sqrt:
            want(1);
            return make_node(unary_elementwise(inputs[0]->value,
                                               [](double x) {
                                                   if (x < 0.0)
                                                       throw DomainError(
                                                           "sqrt: input must be non-negative");
                                                   return std::sqrt(x);
                                               }),
                             op, attrs, {inputs[0]});
        case OpKind::Transpose:
            want(1);
            return make_node(transpose_value(inputs[0]->value), op, attrs, {inputs[0]});
        case OpKind::Concat:
            return make_node(concat_value(inputs, attrs.axis), op, attrs, inputs);
        case OpKind::Slice:
            want(1);
            return make_node(slice_value(inputs[0]->value, attrs.axis, attrs.begin, attrs.end),
                             op, attrs, {inputs[0]});
        case OpKind::Sum:
            want(1);
            return make_node(sum_value(inputs[0]->value, attrs.axis), op, attrs, {inputs[0]});
        case OpKind::Mean: {
            want(1);
            if (inputs[0]->value.size() == 0)
                throw DimensionError("mean: empty tensor");
            Tensor s = sum_value(inputs[0]->value, -1);
            s[0] /= static_cast<double>(inputs[0]->value.size());
            return make_node(std::move(s), op, attrs, {inputs[0]});
        }
        case OpKind::RowL2Norm:
            // Composite: sqrt(row-sum of squares). Differentiates through the
            // primitive kinds, so no dedicated VJP exists for it.
            want(1);
            return sqrt(sum(square(inputs[0]), 1));
    }
    throw ContractError("apply: unknown op");
}

NodePtr matmul(const NodePtr& a, const NodePtr& b) { return apply(OpKind::MatMul, {a, b}); }
NodePtr add(const NodePtr& a, const NodePtr& b) { return apply(OpKind::Add, {a, b}); }
NodePtr sub(const NodePtr& a, const NodePtr& b) { return apply(OpKind::Sub, {a, b}); }
NodePtr mul(const NodePtr& a, const NodePtr& b) { return apply(OpKind::Mul, {a, b}); }
NodePtr div(const NodePtr& a, const NodePtr& b) { return apply(OpKind::Div, {a, b}); }

NodePtr scale(const NodePtr& a, double c) {
    OpAttrs attrs;
    attrs.scalar = c;
    return apply(OpKind::Scale, {a}, attrs);
}

NodePtr relu(const NodePtr& a) { return apply(OpKind::Relu, {a}); }

NodePtr leaky_relu(const NodePtr& a, double slope) {
    OpAttrs attrs;
    attrs.scalar = slope;
    return apply(OpKind::LeakyRelu, {a}, attrs);
}

NodePtr softmax_temp(const NodePtr& a, double tau) {
    OpAttrs attrs;
    attrs.scalar = tau;
    return apply(OpKind::SoftmaxTemp, {a}, attrs);
}

NodePtr log(const NodePtr& a) { return apply(OpKind::Log, {a}); }
NodePtr exp(const NodePtr& a) { return apply(OpKind::Exp, {a}); }
NodePtr square(const NodePtr& a) { return apply(OpKind::Square, {a}); }
NodePtr sqrt(const NodePtr& a) { return apply(OpKind::Sqrt, {a}); }
NodePtr transpose(const NodePtr& a) { return apply(OpKind::Transpose, {a}); }

NodePtr concat(const std::vector<NodePtr>& parts, int axis) {
    OpAttrs attrs;
    attrs.axis = axis;
    return apply(OpKind::Concat, parts, attrs);
}

NodePtr slice(const NodePtr& a, int axis, std::size_t begin, std::size_t end) {
    OpAttrs attrs;
    attrs.axis = axis;
    attrs.begin = begin;
    attrs.end = end;
    return apply(OpKind::Slice, {a}, attrs);
}

NodePtr sum(const NodePtr& a, int axis) {
    OpAttrs attrs;
    attrs.axis = axis;
    return apply(OpKind::Sum, {a}, attrs);
}

NodePtr mean(const NodePtr& a) { return apply(OpKind::Mean, {a}); }
NodePtr row_l2_norm(const NodePtr& a) { return apply(OpKind::RowL2Norm, {a}); }

namespace {

// Reduce a full-shape gradient back to the declared shape of a broadcast
// operand. The restricted broadcast rules guarantee the sum below lands on
// exactly the right declared shape.
NodePtr reduce_to(const NodePtr& g, const Tensor& target) {
    if (g->value.same_shape(target)) return g;
    if (target.rank() == 0) return sum(g, -1);
    if (target.rank() == 2 && target.dim(0) == 1) return sum(g, 0);
    if (target.rank() == 2 && target.dim(1) == 1) return sum(g, 1);
    throw DimensionError("backward: cannot reduce gradient " + g->value.shape_str() +
                         " to operand shape " + target.shape_str());
}

// Derivative mask for (leaky) relu. Inputs exactly at the kink take the
// negative-slope branch; the mask is a constant, so its own derivative is 0.
NodePtr relu_mask(const Tensor& x, double slope) {
    Tensor m(x.shape());
    for (std::size_t i = 0; i < x.size(); ++i) m[i] = x[i] > 0.0 ? 1.0 : slope;
    return constant(std::move(m));
}

}  // namespace

GradMap backward(const NodePtr& root, bool create_graph, const std::vector<NodePtr>& wrt) {
    if (!root) throw ContractError("backward: null root");
    if (root->value.size() != 1)
        throw ContractError("backward: root must be scalar-valued, got shape " +
                            root->value.shape_str());

    // Iterative DFS postorder: inputs appear before their consumers.
    std::vector<Node*> topo;
    {
        std::unordered_set<const Node*> seen;
        std::vector<std::pair<Node*, std::size_t>> stack;
        stack.emplace_back(root.get(), 0);
        seen.insert(root.get());
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < node->parents.size()) {
                Node* p = node->parents[next++].get();
                if (seen.insert(p).second) stack.emplace_back(p, 0);
            } else {
                topo.push_back(node);
                stack.pop_back();
            }
        }
    }

    // Mark the nodes whose gradient is actually needed: ancestors of the wrt
    // targets (or of any grad-requiring leaf when no targets are given).
    std::unordered_set<const Node*> targets;
    for (const NodePtr& t : wrt) targets.insert(t.get());
    std::unordered_map<const Node*, bool> needed;
    needed.reserve(topo.size());
    for (Node* n : topo) {
        bool need = targets.empty() ? (n->op == OpKind::Leaf && n->requires_grad)
                                    : targets.count(n) > 0;
        if (!need)
            for (const NodePtr& p : n->parents)
                if (needed[p.get()]) {
                    need = true;
                    break;
                }
        needed[n] = need;
    }

    GradMap grads;
    grads[root.get()] = constant(Tensor::full(root->value.shape(), 1.0));

    auto flows = [&](const NodePtr& p) { return p->requires_grad && needed[p.get()]; };
    auto accumulate = [&](const NodePtr& p, NodePtr contrib) {
        auto it = grads.find(p.get());
        if (it == grads.end()) grads.emplace(p.get(), std::move(contrib));
        else it->second = add(it->second, contrib);
    };

    for (auto rit = topo.rbegin(); rit != topo.rend(); ++rit) {
        Node* n = *rit;
        auto git = grads.find(n);
        if (git == grads.end() || n->op == OpKind::Leaf || !n->requires_grad) continue;
        const NodePtr g = git->second;
        const std::vector<NodePtr>& ps = n->parents;
        switch (n->op) {
            case OpKind::MatMul: {
                if (flows(ps[0])) accumulate(ps[0], matmul(g, transpose(ps[1])));
                if (flows(ps[1])) accumulate(ps[1], matmul(transpose(ps[0]), g));
                break;
            }
            case OpKind::Add: {
                if (flows(ps[0])) accumulate(ps[0], reduce_to(g, ps[0]->value));
                if (flows(ps[1])) accumulate(ps[1], reduce_to(g, ps[1]->value));
                break;
            }
            case OpKind::Sub: {
                if (flows(ps[0])) accumulate(ps[0], reduce_to(g, ps[0]->value));
                if (flows(ps[1])) accumulate(ps[1], reduce_to(scale(g, -1.0), ps[1]->value));
                break;
            }
            case OpKind::Mul: {
                if (flows(ps[0])) accumulate(ps[0], reduce_to(mul(g, ps[1]), ps[0]->value));
                if (flows(ps[1])) accumulate(ps[1], reduce_to(mul(g, ps[0]), ps[1]->value));
                break;
            }
            case OpKind::Div: {
                if (flows(ps[0])) accumulate(ps[0], reduce_to(div(g, ps[1]), ps[0]->value));
                if (flows(ps[1])) {
                    // d/db (a/b) = -(a/b)/b; this node is a/b.
                    NodePtr quotient = n->shared_from_this();
                    accumulate(ps[1],
                               reduce_to(scale(mul(g, div(quotient, ps[1])), -1.0),
                                         ps[1]->value));
                }
                break;
            }
            case OpKind::Scale: {
                if (flows(ps[0])) accumulate(ps[0], scale(g, n->attrs.scalar));
                break;
            }
            case OpKind::Relu: {
                if (flows(ps[0])) accumulate(ps[0], mul(g, relu_mask(ps[0]->value, 0.0)));
                break;
            }
            case OpKind::LeakyRelu: {
                if (flows(ps[0]))
                    accumulate(ps[0], mul(g, relu_mask(ps[0]->value, n->attrs.scalar)));
                break;
            }
            case OpKind::SoftmaxTemp: {
                if (flows(ps[0])) {
                    // s/tau * (g - rowsum(g*s)); s is this node itself, which keeps
                    // the expression differentiable for double backprop.
                    NodePtr s = n->shared_from_this();
                    NodePtr rowdot = sum(mul(g, s), 1);
                    accumulate(ps[0], scale(mul(s, sub(g, rowdot)), 1.0 / n->attrs.scalar));
                }
                break;
            }
            case OpKind::Log: {
                if (flows(ps[0])) accumulate(ps[0], div(g, ps[0]));
                break;
            }
            case OpKind::Exp: {
                if (flows(ps[0])) accumulate(ps[0], mul(g, n->shared_from_this()));
                break;
            }
            case OpKind::Square: {
                if (flows(ps[0])) accumulate(ps[0], mul(g, scale(ps[0], 2.0)));
                break;
            }
            case OpKind::Sqrt: {
                if (flows(ps[0]))
                    accumulate(ps[0], div(g, scale(n->shared_from_this(), 2.0)));
                break;
            }
            case OpKind::Transpose: {
                if (flows(ps[0])) accumulate(ps[0], transpose(g));
                break;
            }
            case OpKind::Concat: {
                std::size_t off = 0;
                for (const NodePtr& p : ps) {
                    const std::size_t w = p->value.dim(static_cast<std::size_t>(n->attrs.axis));
                    if (flows(p)) accumulate(p, slice(g, n->attrs.axis, off, off + w));
                    off += w;
                }
                break;
            }
            case OpKind::Slice: {
                if (flows(ps[0])) {
                    const int axis = n->attrs.axis;
                    const std::size_t total = ps[0]->value.dim(static_cast<std::size_t>(axis));
                    std::vector<NodePtr> parts;
                    auto zero_part = [&](std::size_t extent) {
                        std::vector<std::size_t> shape = ps[0]->value.shape();
                        shape[static_cast<std::size_t>(axis)] = extent;
                        return constant(Tensor(shape));
                    };
                    if (n->attrs.begin > 0) parts.push_back(zero_part(n->attrs.begin));
                    parts.push_back(g);
                    if (n->attrs.end < total) parts.push_back(zero_part(total - n->attrs.end));
                    accumulate(ps[0], parts.size() == 1 ? g : concat(parts, axis));
                }
                break;
            }
            case OpKind::Sum: {
                if (flows(ps[0]))
                    accumulate(ps[0], add(constant(Tensor(ps[0]->value.shape())), g));
                break;
            }
            case OpKind::Mean: {
                if (flows(ps[0]))
                    accumulate(ps[0],
                               add(constant(Tensor(ps[0]->value.shape())),
                                   scale(g, 1.0 / static_cast<double>(ps[0]->value.size()))));
                break;
            }
            case OpKind::Leaf:
            case OpKind::RowL2Norm:
                break;
        }
    }

    GradMap out;
    if (targets.empty()) {
        for (Node* n : topo) {
            if (n->op != OpKind::Leaf || !n->requires_grad) continue;
            auto it = grads.find(n);
            NodePtr g = it != grads.end() ? it->second : constant(Tensor(n->value.shape()));
            out.emplace(n, create_graph ? g : detach(g));
        }
    } else {
        for (const NodePtr& t : wrt) {
            auto it = grads.find(t.get());
            NodePtr g =
                it != grads.end() ? it->second : constant(Tensor(t->value.shape()));
            out.emplace(t.get(), create_graph ? g : detach(g));
        }
    }
    return out;
}

Tensor gumbel_noise(const std::vector<std::size_t>& shape, Rng& rng) {
    Tensor t(shape);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.gumbel();
    return t;
}

Tensor normal_noise(const std::vector<std::size_t>& shape, Rng& rng) {
    Tensor t(shape);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.normal();
    return t;
}

}  // namespace fairtab
