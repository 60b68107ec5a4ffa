#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace si {

// Deterministic random source. The engine is std::mt19937_64 (bit-exact by
// the standard) and every distribution is implemented here rather than via
// std::*_distribution, whose algorithms differ between standard libraries.
// Same seed, same platform or not: same stream.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t raw();

    // Uniform on [0,1) with 53 bits of mantissa.
    double uniform();
    double uniform(double lo, double hi);

    // Uniform integer in {0, ..., n-1}; n >= 1.
    int uniform_int(int n);

    // Standard normal via Box-Muller (pairs cached).
    double normal();

    // Exp(1).
    double exponential();

    // Gamma(shape, 1) via Marsaglia-Tsang, with the shape<1 boost.
    double gamma(double shape);

    // Beta(a, b) as a ratio of gammas.
    double beta(double a, double b);

    // Flat Dirichlet over the (n-1)-simplex: normalized iid Exp(1) draws.
    std::vector<double> dirichlet_flat(int n);

    // Fisher-Yates permutation of {0..n-1}.
    std::vector<int> permutation(int n);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[static_cast<size_t>(i)],
                      v[static_cast<size_t>(uniform_int(i + 1))]);
        }
    }

    // Number of raw engine draws consumed so far; used as a cheap state tag.
    uint64_t draw_count() const { return draws_; }

    std::string serialize() const;
    void deserialize(const std::string& text);

private:
    std::mt19937_64 engine_;
    uint64_t draws_ = 0;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

// Stable seed derivation for independent substreams. Mixes the root seed
// with a tag string and up to two indices (SplitMix64 finalizer); collisions
// between distinct (tag, a, b) triples are not a practical concern.
uint64_t derive_seed(uint64_t root, std::string_view tag, uint64_t a = 0,
                     uint64_t b = 0);

}  // namespace si
