#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace cfa {

// Deterministic, platform-independent PRNG (xoshiro256++ seeded through
// splitmix64). Everything in the toolkit that needs randomness goes through
// this class so that identical seeds reproduce identical artifacts bit for
// bit, independent of the standard library in use.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0, 1), 53-bit resolution.
    double uniform();
    double uniform(double lo, double hi);

    // Standard normal via Box-Muller (fixed consumption: two draws per call).
    double normal();

    // Uniform integer in [0, n). n must be > 0.
    std::size_t below(std::size_t n);

    // Seeded Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = below(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    std::uint64_t state_[4];
};

// splitmix64 step; also used to derive independent per-item streams as
// hash_seed(config_seed, item_index).
std::uint64_t splitmix64(std::uint64_t& x);
std::uint64_t hash_seed(std::uint64_t seed, std::uint64_t index);

// Inverse standard normal CDF (Acklam's rational approximation plus one
// Halley refinement through std::erfc; good to ~1e-14 on (0,1)).
double norm_ppf(double p);

}  // namespace cfa
