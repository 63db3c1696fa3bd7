#include "evotrans/rng.hpp"

#include <algorithm>
#include <cmath>

namespace evotrans {

int64_t Rng::binomial_small(int64_t n, double p) {
    const double u = uniform01();
    const double odds = p / (1.0 - p);
    double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));  // (1-p)^n
    double cdf = pmf;
    int64_t k = 0;
    while (u >= cdf && k < n) {
        pmf *= odds * static_cast<double>(n - k) / static_cast<double>(k + 1);
        ++k;
        cdf += pmf;
    }
    return k;
}

int64_t Rng::binomial(int64_t n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    // Slice so every piece has expectation <= 32; a sum of independent
    // binomials with the same p is the full binomial.
    const auto chunk = std::max<int64_t>(1, static_cast<int64_t>(32.0 / p));
    int64_t total = 0;
    while (n > chunk) {
        total += binomial_small(chunk, p);
        n -= chunk;
    }
    return total + binomial_small(n, p);
}

uint64_t derive_stream_seed(uint64_t master, uint64_t stream) {
    // splitmix64 finalizer over the combined inputs
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace evotrans
