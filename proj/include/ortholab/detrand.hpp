#pragma once

#include <cstdint>
#include <vector>

namespace ortholab {

// Self-contained PRNG (splitmix64) so that seeded corpora and greedy searches
// reproduce bit-for-bit on any platform / standard library.
class DetRand {
public:
    explicit DetRand(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound ≥ 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = ~0ULL - (~0ULL % bound) - 1;
        std::uint64_t v = next();
        while (v > limit) v = next();
        return v % bound;
    }

    double unit() {  // [0,1)
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {  // Fisher–Yates, fixed order
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace ortholab
