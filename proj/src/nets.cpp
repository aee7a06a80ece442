#include "nets.hpp"

#include <cmath>

#include "binio.hpp"
#include "errors.hpp"

namespace fairtab {

namespace {

constexpr std::uint32_t kMagic = 0x46544e50;  // "FTNP"
constexpr std::uint32_t kVersion = 1;

NodePtr init_weight(std::size_t fan_in, std::size_t fan_out, Rng& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    Tensor w({fan_in, fan_out});
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = rng.uniform(-bound, bound);
    return leaf(std::move(w), true);
}

NodePtr init_bias(std::size_t n) { return leaf(Tensor({1, n}), true); }

void check_width(const NodePtr& x, std::size_t l_w, const char* who) {
    if (x->value.rank() != 2 || x->value.dim(1) != l_w)
        throw DimensionError(std::string(who) + ": input width " +
                             (x->value.rank() == 2 ? std::to_string(x->value.dim(1))
                                                   : x->value.shape_str()) +
                             " does not match l_w = " + std::to_string(l_w));
}

}  // namespace

std::vector<NodePtr> GeneratorParams::all() const {
    std::vector<NodePtr> ps{w1, b1};
    if (w_num) {
        ps.push_back(w_num);
        ps.push_back(b_num);
    }
    for (std::size_t i = 0; i < w_cat.size(); ++i) {
        ps.push_back(w_cat[i]);
        ps.push_back(b_cat[i]);
    }
    return ps;
}

std::vector<NodePtr> CriticParams::all() const { return {w1, b1, w2, b2, w_out, b_out}; }

GeneratorParams init_generator(const FittedTransformer& fitted, Rng& rng) {
    const std::size_t l_w = fitted.width();
    GeneratorParams gp;
    gp.w1 = init_weight(l_w, l_w, rng);
    gp.b1 = init_bias(l_w);
    if (fitted.numeric_count() > 0) {
        gp.w_num = init_weight(l_w, fitted.numeric_count(), rng);
        gp.b_num = init_bias(fitted.numeric_count());
    }
    for (std::size_t w : fitted.cat_widths()) {
        gp.w_cat.push_back(init_weight(l_w, w, rng));
        gp.b_cat.push_back(init_bias(w));
    }
    return gp;
}

CriticParams init_critic(const FittedTransformer& fitted, Rng& rng) {
    const std::size_t l_w = fitted.width();
    CriticParams cp;
    cp.w1 = init_weight(l_w, l_w, rng);
    cp.b1 = init_bias(l_w);
    cp.w2 = init_weight(l_w, l_w, rng);
    cp.b2 = init_bias(l_w);
    cp.w_out = init_weight(l_w, 1, rng);
    cp.b_out = init_bias(1);
    return cp;
}

NodePtr generator_forward(const NodePtr& z, const GeneratorParams& gp,
                          const FittedTransformer& fitted, GenMode mode, Rng* rng) {
    check_width(z, fitted.width(), "generator_forward");
    if (mode == GenMode::Soft && rng == nullptr)
        throw ContractError("generator_forward: soft mode needs an rng for gumbel noise");
    const std::size_t m = z->value.dim(0);
    NodePtr h1 = relu(add(matmul(z, gp.w1), gp.b1));
    std::vector<NodePtr> blocks;
    if (gp.w_num) blocks.push_back(relu(add(matmul(h1, gp.w_num), gp.b_num)));
    for (std::size_t i = 0; i < gp.w_cat.size(); ++i) {
        NodePtr logits = add(matmul(h1, gp.w_cat[i]), gp.b_cat[i]);
        if (mode == GenMode::Soft) {
            NodePtr noisy = add(logits, constant(gumbel_noise(logits->value.shape(), *rng)));
            blocks.push_back(softmax_temp(noisy, gp.tau));
        } else {
            // noise-free argmax one-hot; ties resolve to the lowest index
            const Tensor& lv = logits->value;
            Tensor onehot(lv.shape());
            for (std::size_t r = 0; r < m; ++r) {
                std::size_t best = 0;
                for (std::size_t j = 1; j < lv.dim(1); ++j)
                    if (lv.at(r, j) > lv.at(r, best)) best = j;
                onehot.at(r, best) = 1.0;
            }
            blocks.push_back(constant(std::move(onehot)));
        }
    }
    return blocks.size() == 1 ? blocks[0] : concat(blocks, 1);
}

NodePtr critic_forward(const NodePtr& x, const CriticParams& cp) {
    check_width(x, cp.w1->value.dim(0), "critic_forward");
    NodePtr h1 = leaky_relu(add(matmul(x, cp.w1), cp.b1), 0.01);
    NodePtr h2 = leaky_relu(add(matmul(h1, cp.w2), cp.b2), 0.01);
    return add(matmul(h2, cp.w_out), cp.b_out);
}

namespace {

void write_tensor(BinWriter& w, const Tensor& t) {
    w.u32(static_cast<std::uint32_t>(t.rank()));
    for (std::size_t d : t.shape()) w.u64(d);
    w.f64s(t.values());
}

Tensor read_tensor(BinReader& r) {
    const std::uint32_t rank = r.u32();
    std::vector<std::size_t> shape(rank);
    for (auto& d : shape) d = static_cast<std::size_t>(r.u64());
    std::vector<double> data = r.f64s();
    return Tensor(std::move(shape), std::move(data));
}

}  // namespace

void save_params(const std::string& path, const GeneratorParams& gp, const CriticParams& cp,
                 const std::string& meta) {
    BinWriter w(path);
    w.u32(kMagic);
    w.u32(kVersion);
    w.str(meta);
    w.f64(gp.tau);
    w.u8(gp.w_num ? 1 : 0);
    w.u32(static_cast<std::uint32_t>(gp.w_cat.size()));
    write_tensor(w, gp.w1->value);
    write_tensor(w, gp.b1->value);
    if (gp.w_num) {
        write_tensor(w, gp.w_num->value);
        write_tensor(w, gp.b_num->value);
    }
    for (std::size_t i = 0; i < gp.w_cat.size(); ++i) {
        write_tensor(w, gp.w_cat[i]->value);
        write_tensor(w, gp.b_cat[i]->value);
    }
    for (const NodePtr& p : CriticParams(cp).all()) write_tensor(w, p->value);
    w.done();
}

std::pair<GeneratorParams, CriticParams> load_params(const std::string& path,
                                                     std::string* meta) {
    BinReader r(path);
    if (r.u32() != kMagic) throw IoError("'" + path + "' is not a parameter file");
    if (r.u32() != kVersion) throw IoError("'" + path + "': unsupported parameter version");
    const std::string m = r.str();
    if (meta) *meta = m;
    GeneratorParams gp;
    gp.tau = r.f64();
    const bool has_num = r.u8() != 0;
    const std::uint32_t ncat = r.u32();
    gp.w1 = leaf(read_tensor(r), true);
    gp.b1 = leaf(read_tensor(r), true);
    if (has_num) {
        gp.w_num = leaf(read_tensor(r), true);
        gp.b_num = leaf(read_tensor(r), true);
    }
    for (std::uint32_t i = 0; i < ncat; ++i) {
        gp.w_cat.push_back(leaf(read_tensor(r), true));
        gp.b_cat.push_back(leaf(read_tensor(r), true));
    }
    CriticParams cp;
    cp.w1 = leaf(read_tensor(r), true);
    cp.b1 = leaf(read_tensor(r), true);
    cp.w2 = leaf(read_tensor(r), true);
    cp.b2 = leaf(read_tensor(r), true);
    cp.w_out = leaf(read_tensor(r), true);
    cp.b_out = leaf(read_tensor(r), true);
    return {std::move(gp), std::move(cp)};
}

}  // namespace fairtab
