#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace nhb {

// Deterministic PRNG stack. Everything that affects emitted bytes draws from
// these generators, never from std::random distributions (their output is
// implementation-defined and would break cross-host reproducibility).

uint64_t splitmix64(uint64_t& state);

// Stable 64-bit mix of an arbitrary key tuple, used to derive independent
// substreams: derive_seed(seed, "articles", index).
uint64_t derive_seed(uint64_t root, std::string_view tag, uint64_t index = 0);

class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    // Uniform in [0, bound), bias-free.
    uint64_t next_below(uint64_t bound);
    // Uniform integer in [lo, hi] inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi);
    // Uniform in [0, 1) with 53-bit resolution.
    double next_double();
    double uniform_real(double lo, double hi);
    bool chance(double p);
    // Exponential with the given mean (inverse-CDF).
    double exponential(double mean);
    // Standard normal via polar Box-Muller; one value per call, cached pair.
    double gaussian();
    double lognormal(double mu, double sigma);

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[next_below(items.size())];
    }

private:
    uint64_t s_[4];
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

// Zipf sampler over ranks 1..n with exponent s, via precomputed CDF and
// binary search. Sampling cost O(log n), setup O(n).
class ZipfSampler {
public:
    ZipfSampler(uint32_t n, double exponent);

    // Rank in [1, n]; rank 1 is the most probable.
    uint32_t sample(Rng& rng) const;
    uint32_t size() const { return n_; }
    // Theoretical probability of a given rank.
    double pmf(uint32_t rank) const;

private:
    uint32_t n_;
    double exponent_;
    double norm_;
    std::vector<double> cdf_;
};

} // namespace nhb
