#pragma once

#include <cstdint>
#include <vector>

namespace scholnet {

// splitmix64 (Steele, Lea, Vigna). Small, fast, and fully specified, so a
// fixed seed reproduces the same stream on any platform. The algorithm name
// is recorded in output metadata headers.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = -n % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

private:
    std::uint64_t state_;
};

// Deterministic Fisher-Yates; std::shuffle is not pinned down by the
// standard, so results would differ between standard libraries.
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace scholnet
