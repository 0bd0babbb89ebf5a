#include "linlay/rng.hpp"

namespace linlay {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Largest multiple of bound that fits; draws at or above it are rejected.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % bound;
}

double Rng::unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

Rng Rng::split(std::uint64_t stream) const { return Rng(mix64(state_ ^ mix64(stream + kGolden))); }

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = mix64(base);
    for (std::uint64_t p : parts) h = mix64(h ^ (p + kGolden + (h << 6) + (h >> 2)));
    return h;
}

}  // namespace linlay
