#ifndef MNG_RNG_HPP
#define MNG_RNG_HPP

#include <cstdint>
#include <random>

// Deterministic random draws.  Raw mt19937_64 output is mapped to ranges by
// hand so that generated instances are reproducible across standard library
// implementations; std::uniform_int_distribution and friends are specified
// loosely and must not be used here.

namespace mng {

// splitmix64 finisher; used to spread seeds for per-sample substreams.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent per-sample seed derived from a base seed and a sample index.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 1));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform value in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            std::uint64_t x = engine_();
            if (x < limit) return x % bound;
        }
    }

    int int_in(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) { return unit() < p; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace mng

#endif
