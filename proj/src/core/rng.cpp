#include "core/rng.hpp"

#include <cassert>
#include <cmath>

namespace nhb {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t root, std::string_view tag, uint64_t index) {
    // FNV-1a over the tag, then fold in root and index through splitmix.
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    uint64_t state = root ^ h;
    uint64_t a = splitmix64(state);
    state ^= index * 0x9e3779b97f4a7c15ULL;
    uint64_t b = splitmix64(state);
    return a ^ (b + 0x2545f4914f6cdd1dULL);
}

Rng::Rng(uint64_t seed) {
    uint64_t state = seed;
    for (auto& s : s_) s = splitmix64(state);
}

uint64_t Rng::next_u64() {
    // xoshiro256**
    auto rotl = [](uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

uint64_t Rng::next_below(uint64_t bound) {
    assert(bound > 0);
    // Rejection sampling to avoid modulo bias.
    const uint64_t threshold = -bound % bound;
    for (;;) {
        uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

int64_t Rng::uniform_int(int64_t lo, int64_t hi) {
    assert(lo <= hi);
    return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo) + 1));
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_real(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

bool Rng::chance(double p) {
    return next_double() < p;
}

double Rng::exponential(double mean) {
    double u = next_double();
    return -mean * std::log1p(-u);
}

double Rng::gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    cached_gaussian_ = v * m;
    has_cached_gaussian_ = true;
    return u * m;
}

double Rng::lognormal(double mu, double sigma) {
    return std::exp(mu + sigma * gaussian());
}

ZipfSampler::ZipfSampler(uint32_t n, double exponent) : n_(n), exponent_(exponent) {
    assert(n > 0 && exponent > 0.0);
    cdf_.resize(n);
    double acc = 0.0;
    for (uint32_t i = 0; i < n; i++) {
        acc += std::pow(static_cast<double>(i + 1), -exponent);
        cdf_[i] = acc;
    }
    norm_ = acc;
    for (auto& c : cdf_) c /= norm_;
    cdf_.back() = 1.0;
}

uint32_t ZipfSampler::sample(Rng& rng) const {
    double u = rng.next_double();
    uint32_t lo = 0, hi = n_ - 1;
    while (lo < hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        if (cdf_[mid] < u)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo + 1;
}

double ZipfSampler::pmf(uint32_t rank) const {
    assert(rank >= 1 && rank <= n_);
    return std::pow(static_cast<double>(rank), -exponent_) / norm_;
}

} // namespace nhb
