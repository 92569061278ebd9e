#ifndef BRANCHDIV_RNG_HPP
#define BRANCHDIV_RNG_HPP

#include <cstdint>

namespace branchdiv {

// Deterministic, platform-independent PRNG (splitmix64). std:: engines and
// distributions are implementation-defined across standard libraries, which
// would break byte-reproducibility of seeded runs.
class Rng {
   public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // small signed integer in [-k, k] \ {0}, handy for generic coefficients
    long nonzero(long k) {
        long v = static_cast<long>(below(2 * static_cast<std::uint64_t>(k))) - k;
        return v >= 0 ? v + 1 : v;
    }

    // small signed integer in [-k, k]
    long windowed(long k) {
        return static_cast<long>(below(2 * static_cast<std::uint64_t>(k) + 1)) - k;
    }

   private:
    std::uint64_t state_;
};

}  // namespace branchdiv

#endif
