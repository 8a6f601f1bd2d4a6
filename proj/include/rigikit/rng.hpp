#ifndef RIGIKIT_RNG_HPP
#define RIGIKIT_RNG_HPP

#include <cstdint>

namespace rigikit {

// Deterministic 64-bit generator (splitmix64). All randomized routines in the
// library take an explicit seed; identical seed gives identical output.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound), bound > 0. Rejection sampling keeps the
    // distribution exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Derive an independent stream seed from a base seed and a salt.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    SplitMix64 g(base ^ (0x51c6f4a1d3b2e79full * (salt + 1)));
    return g.next();
}

} // namespace rigikit

#endif
