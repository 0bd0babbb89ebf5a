#ifndef LINLAY_RNG_HPP
#define LINLAY_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

namespace linlay {

/**
 * SplitMix64 (Steele, Lea, Flood 2014): a 64-bit state advanced by the
 * golden-ratio increment and finalized with the MurmurHash3-style mixer.
 *
 * Every random decision in the library goes through this class, and the
 * bounded/real draws below are defined here rather than taken from
 * <random> distributions, whose output is implementation-defined. The
 * sequence for a given seed is therefore identical on every platform.
 * Changing anything here changes every generated campaign.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform integer in [0, bound); bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit();

    /// Independent child generator for stream `stream`.
    Rng split(std::uint64_t stream) const;

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// The SplitMix64 finalizer; also used to derive job seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed derivation for a tuple of identifiers.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

}  // namespace linlay

#endif  // LINLAY_RNG_HPP
