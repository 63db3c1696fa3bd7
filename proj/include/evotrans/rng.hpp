#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace evotrans {

// Single deterministic random stream. Every stochastic component of a run
// draws from one Rng in a fixed, documented order, so a (seed, config) pair
// replays to a bit-identical trajectory.
//
// Word accounting, part of the replay contract:
//   next_u64()         one engine word
//   uniform_index(n)   one engine word
//   uniform01()        one engine word
//   bernoulli(p)       one engine word
//   binomial(n, p)     one engine word per <=32-expectation slice;
//                      degenerate calls (n <= 0, p <= 0, p >= 1) draw nothing
//
// A scripted Rng serves queued raw words first and falls back to the seeded
// engine once the script is exhausted; tests use it to force exact
// trajectories.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    static Rng scripted(std::vector<uint64_t> words, uint64_t fallback_seed = 0) {
        Rng rng(fallback_seed);
        rng.script_ = std::move(words);
        return rng;
    }

    uint64_t next_u64() {
        if (script_pos_ < script_.size()) return script_[script_pos_++];
        return engine_();
    }

    // Uniform integer in [0, n). Fixed-point multiply keeps the mapping from
    // raw words monotone, which scripted tests rely on.
    uint64_t uniform_index(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Binomial(n, p) by CDF inversion. Splits n so each slice's expectation
    // stays small enough that (1-p)^n cannot underflow.
    int64_t binomial(int64_t n, double p);

  private:
    int64_t binomial_small(int64_t n, double p);

    std::mt19937_64 engine_;
    std::vector<uint64_t> script_;
    std::size_t script_pos_ = 0;
};

// Decorrelated child seed for trial workers; merging results by trial index
// keeps parallel benches deterministic.
uint64_t derive_stream_seed(uint64_t master, uint64_t stream);

// Nondeterministic seed for runs where the user gave none.
uint64_t entropy_seed();

// Raw word that makes uniform_index(n) return exactly `index`; helper for
// scripted streams.
constexpr uint64_t word_for_index(uint64_t index, uint64_t n) {
    // Smallest w with (w * n) >> 64 == index.
    unsigned __int128 lo = (static_cast<unsigned __int128>(index) << 64) + n - 1;
    return static_cast<uint64_t>(lo / n);
}

}  // namespace evotrans
