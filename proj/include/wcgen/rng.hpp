#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace wcgen {

// Seedable 64-bit generator with hand-rolled bounded draws. std::mt19937_64 is
// specified bit-for-bit by the standard, and doing the range reduction ourselves
// (rejection sampling) keeps streams identical across standard libraries, which
// the reproducibility guarantees depend on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    // Unbiased integer in [lo, hi].
    long uniform_int(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return lo + static_cast<long>(next());  // full 64-bit span
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() / range * range;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<long>(x % range);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) {
            const std::size_t j =
                static_cast<std::size_t>(uniform_int(0, static_cast<long>(i) - 1));
            std::swap(xs[i - 1], xs[j]);
        }
    }

    static constexpr const char* kAlgorithm = "mt19937_64/rejection";

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace wcgen
