/**
 * @file rng.hpp
 * @brief SplitMix64 pseudo-random generator.
 *
 * All randomness in this project (front generation, Monte Carlo sampling)
 * comes from SplitMix64 so that results reproduce exactly from a 64-bit
 * seed. The generator identity: output k (zero-based) of the stream with
 * seed s is fin(s + (k+1) * 0x9E3779B97F4A7C15) where fin is the
 * murmur-style finalizer below. Outputs are random-accessible, which lets
 * parallel consumers draw the same stream a serial loop would.
 */

#ifndef HVSPLIT_RNG_HPP
#define HVSPLIT_RNG_HPP

#include <cstdint>

namespace hvsplit {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kGamma;
        return finalize(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return to_unit(next_u64()); }

    /// Output at a given stream position, independent of object state.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
        return finalize(seed + (index + 1) * kGamma);
    }

    static double unit_at(std::uint64_t seed, std::uint64_t index) {
        return to_unit(at(seed, index));
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static double to_unit(std::uint64_t v) {
        return static_cast<double>(v >> 11) * 0x1.0p-53;
    }

    std::uint64_t state_;
};

}  // namespace hvsplit

#endif  // HVSPLIT_RNG_HPP
