#include "si/rng.hpp"

#include <cmath>
#include <sstream>

#include "si/errors.hpp"

namespace si {

uint64_t Rng::raw() {
    ++draws_;
    return engine_();
}

double Rng::uniform() {
    return static_cast<double>(raw() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

int Rng::uniform_int(int n) {
    if (n <= 0) throw DomainError("uniform_int: n must be >= 1");
    // Rejection to avoid modulo bias.
    const uint64_t bound = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = raw();
    } while (x >= limit);
    return static_cast<int>(x % bound);
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

double Rng::exponential() {
    // 1-u in (0,1], so the log is finite.
    return -std::log(1.0 - uniform());
}

double Rng::gamma(double shape) {
    if (shape <= 0.0) throw DomainError("gamma: shape must be > 0");
    if (shape < 1.0) {
        const double u = uniform();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

double Rng::beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
}

std::vector<double> Rng::dirichlet_flat(int n) {
    if (n < 1) throw DomainError("dirichlet_flat: n must be >= 1");
    std::vector<double> w(static_cast<size_t>(n));
    double sum = 0.0;
    for (auto& x : w) {
        x = exponential();
        sum += x;
    }
    for (auto& x : w) x /= sum;
    return w;
}

std::vector<int> Rng::permutation(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    shuffle(p);
    return p;
}

std::string Rng::serialize() const {
    std::ostringstream os;
    os << engine_ << " " << draws_ << " " << (has_cached_normal_ ? 1 : 0)
       << " ";
    os.precision(17);
    os << cached_normal_;
    return os.str();
}

void Rng::deserialize(const std::string& text) {
    std::istringstream is(text);
    int cached = 0;
    is >> engine_ >> draws_ >> cached >> cached_normal_;
    if (!is) throw FormatError("Rng::deserialize: malformed state string");
    has_cached_normal_ = cached != 0;
}

uint64_t derive_seed(uint64_t root, std::string_view tag, uint64_t a,
                     uint64_t b) {
    // FNV-1a over the tag, then SplitMix64 finalization over the combination.
    uint64_t h = 1469598103934665603ull;
    for (char c : tag) {
        h ^= static_cast<uint8_t>(c);
        h *= 1099511628211ull;
    }
    uint64_t z = root;
    for (uint64_t part : {h, a, b}) {
        z += 0x9e3779b97f4a7c15ull + part;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
    }
    return z;
}

}  // namespace si
