#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace ed {

// Seedable deterministic generator: xoshiro256** with splitmix64 state
// expansion. The algorithm is fixed (not std::mt19937 + distributions,
// whose outputs vary between standard library implementations) so a seed
// reproduces the same uniform/Bernoulli/normal sequence everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform();

    // Standard normal via Box-Muller (pairs cached).
    double normal();

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::array<std::uint64_t, 4> state_{};
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace ed
