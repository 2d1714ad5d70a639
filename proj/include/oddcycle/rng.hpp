#ifndef ODDCYCLE_RNG_HPP
#define ODDCYCLE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace oddcycle {

// Every randomized routine in this repo draws from the generator below, so a
// (graph, seed) pair pins the full outcome. std::mt19937_64 is bit-exact by
// the standard; the bounded draw and shuffle are hand-rolled because the
// stdlib distributions are not portable across implementations.
inline constexpr const char* kPrngId = "mt19937_64";

// splitmix64 finalizer, used as the seed-mixing function.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stream seed for trial/attempt/component i under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), unbiased via rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t min = (-bound) % bound;
        std::uint64_t r = engine_();
        while (r < min) r = engine_();
        return r % bound;
    }

    // Uniform in (0, 1]; the open lower end keeps log() finite.
    double uniform01() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace oddcycle

#endif
