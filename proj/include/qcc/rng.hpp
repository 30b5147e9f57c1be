#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qcc {

/// Deterministic 64-bit RNG used for all instance generation and search
/// perturbation. Wraps std::mt19937_64 (whose output sequence is fixed by
/// the standard) and draws bounded values by rejection sampling, so the
/// same seed yields the same stream on every platform. Never use
/// std::uniform_int_distribution here: its mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        // rejection from the top of the 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return v % bound;
    }

    /// Fisher-Yates shuffle of the first k elements, drawing partners from
    /// the whole vector. With k == v.size() this is a full shuffle.
    template <typename T>
    void partial_shuffle(std::vector<T>& v, std::size_t k) {
        for (std::size_t i = 0; i < k && i + 1 < v.size(); ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(v.size() - i));
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

/// Stable seed mixing for deriving per-task substreams from one user seed.
/// splitmix64 finalizer; fixed constants, no platform dependence.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qcc
