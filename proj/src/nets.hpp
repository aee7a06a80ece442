#pragma once

#include <string>
#include <vector>

#include "graph.hpp"
#include "transformer.hpp"

namespace fairtab {

// Generator: z -> ReLU FC l_w->l_w -> [ReLU FC l_w->N_C | gumbel-softmax FC
// l_w->l_i per categorical column], blocks concatenated to width l_w.
struct GeneratorParams {
    NodePtr w1, b1;
    NodePtr w_num, b_num;  // null when the schema has no numeric columns
    std::vector<NodePtr> w_cat, b_cat;
    double tau = 0.2;

    std::vector<NodePtr> all() const;
};

// Critic: two LeakyReLU(0.01) FC l_w->l_w layers and a linear l_w->1 head.
struct CriticParams {
    NodePtr w1, b1, w2, b2, w_out, b_out;

    std::vector<NodePtr> all() const;
};

enum class GenMode { Soft, Hard };

GeneratorParams init_generator(const FittedTransformer& fitted, Rng& rng);
CriticParams init_critic(const FittedTransformer& fitted, Rng& rng);

// Soft mode adds Gumbel noise to the categorical logits and relaxes them with
// a temperature softmax (training path, differentiable end to end). Hard mode
// takes the noise-free argmax and emits exact one-hots (generation path).
// `rng` may be null in hard mode.
NodePtr generator_forward(const NodePtr& z, const GeneratorParams& gp,
                          const FittedTransformer& fitted, GenMode mode, Rng* rng);

NodePtr critic_forward(const NodePtr& x, const CriticParams& cp);

// Both parameter sets in one versioned binary file; load is bit-exact.
void save_params(const std::string& path, const GeneratorParams& gp, const CriticParams& cp,
                 const std::string& meta = "");
std::pair<GeneratorParams, CriticParams> load_params(const std::string& path,
                                                     std::string* meta = nullptr);

}  // namespace fairtab
