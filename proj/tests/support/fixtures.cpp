#include "support/fixtures.hpp"

#include <cmath>

namespace fairtab::test {

Table make_biased_toy(std::size_t per_group, double ds, std::uint64_t seed) {
    Rng rng(seed);
    const double base = 0.5;
    const std::size_t fav1 = static_cast<std::size_t>(std::llround(
        static_cast<double>(per_group) * (base + ds / 2.0)));
    const std::size_t fav0 = static_cast<std::size_t>(std::llround(
        static_cast<double>(per_group) * (base - ds / 2.0)));

    std::vector<std::int32_t> group, outcome, extra;
    std::vector<double> x1, x2;
    auto add_row = [&](std::int32_t s, std::int32_t y) {
        group.push_back(s);
        outcome.push_back(y);
        extra.push_back(static_cast<std::int32_t>(rng.index(3)));
        // numeric features mildly informative of the label
        x1.push_back(rng.normal() + (y ? 1.0 : -1.0));
        x2.push_back(rng.uniform(0.0, 10.0) + 2.0 * y);
    };
    for (std::size_t i = 0; i < per_group; ++i) add_row(0, i < fav0 ? 1 : 0);   // unprivileged
    for (std::size_t i = 0; i < per_group; ++i) add_row(1, i < fav1 ? 1 : 0);   // privileged

    // deterministic shuffle of row order
    const std::size_t n = group.size();
    auto perm = rng.permutation(n);
    TableBuilder b;
    std::vector<double> px1(n), px2(n);
    std::vector<std::int32_t> pg(n), po(n), pe(n);
    for (std::size_t i = 0; i < n; ++i) {
        pg[i] = group[perm[i]];
        po[i] = outcome[perm[i]];
        pe[i] = extra[perm[i]];
        px1[i] = x1[perm[i]];
        px2[i] = x2[perm[i]];
    }
    b.numeric("x1", px1)
        .numeric("x2", px2)
        .categorical("group", {"u", "p"}, pg)
        .categorical("channel", {"a", "b", "c"}, pe)
        .categorical("outcome", {"no", "yes"}, po)
        .fairness("group", "u", "outcome", "yes");
    return b.build();
}

}  // namespace fairtab::test
