#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace pril {

// Deterministic random source with a pinned byte-level contract, so that a
// seed fully determines every experiment regardless of platform or standard
// library. The contract:
//
//   - engine: std::mt19937_64 seeded directly with the 64-bit seed;
//   - uniform doubles: top 53 bits of one engine draw, scaled to [0, 1);
//   - normals: Box-Muller on two fresh uniforms, no cached second value;
//   - permutations: Fisher-Yates from the top index down, j = draw mod (i+1);
//   - repeat r of a seeded experiment uses seed ^ r;
//   - independent phases of one run (instance generation, interval labeling,
//     stream shuffling) use sub_seed(seed, phase), a splitmix64 mix, so that
//     adding draws to one phase never shifts another.
//
// std::normal_distribution and std::shuffle are deliberately avoided: their
// output is not specified bit-for-bit by the standard.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Normal via Box-Muller; consumes exactly two uniform draws.
    double normal(double mean, double stddev) {
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // Uniform index in {0, ..., n-1}. Modulo mapping, part of the contract.
    std::size_t next_index(std::size_t n) {
        return static_cast<std::size_t>(next_u64() % n);
    }

    bool coin() { return next_double() < 0.5; }

    // Fisher-Yates permutation of {0, ..., n-1}.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = next_index(i);
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

    // Derives the seed for an independent phase of a run.
    static std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t phase) {
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (phase + 1));
        // splitmix64 finalizer
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace pril
