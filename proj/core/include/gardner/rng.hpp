#ifndef GARDNER_RNG_HPP
#define GARDNER_RNG_HPP

#include <cmath>
#include <cstdint>

namespace gardner {

/// Small deterministic generator (splitmix64). Distributions are hand-rolled
/// so streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Independent stream for sample `index` of a master seed.
    static Rng stream(uint64_t master_seed, uint64_t index) {
        Rng mix(master_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next_u64();
        return mix;
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal (Box-Muller; the sine partner is discarded so the
    /// stream layout stays simple).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    uint64_t state_;
};

}  // namespace gardner

#endif
