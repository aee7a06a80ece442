#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace fairtab {

// Deterministic random stream. std::mt19937_64 supplies the raw bits; the
// floating-point draws are derived here instead of through std::*_distribution
// because those are implementation-defined and would break reproducibility of
// persisted artifacts across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on the open interval (0,1); never returns an exact 0 or 1.
    double uniform() {
        const std::uint64_t bits = gen_() >> 11;  // top 53 bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller. No spare caching so the stream position
    // is a pure function of the number of draws.
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double gumbel() { return gumbel_from_uniform(uniform()); }

    // Standard Gumbel transform g = -log(-log(u)). u is clamped away from the
    // interval ends so the result is always finite.
    static double gumbel_from_uniform(double u) {
        if (u < 1e-12) u = 1e-12;
        if (u > 1.0 - 1e-12) u = 1.0 - 1e-12;
        return -std::log(-std::log(u));
    }

    // Index in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

    std::vector<std::uint32_t> permutation(std::size_t n) {
        std::vector<std::uint32_t> p(n);
        std::iota(p.begin(), p.end(), 0u);
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(gen_() % i);
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

    // Derive an independent stream. Used for side channels (per-epoch probes,
    // per-replicate runs) that must not disturb the main stream.
    Rng spawn(std::uint64_t salt) const { return Rng(mix(seed_, salt)); }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        // splitmix64 finalizer over the combined words
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace fairtab
