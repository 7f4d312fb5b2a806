#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace sensorfx {

/// SipHash-2-4 of `message` under the 128-bit key (k0, k1), both little-endian
/// halves of the canonical 16-byte key.
std::uint64_t siphash24(std::uint64_t k0, std::uint64_t k1, std::span<const std::uint8_t> message);
std::uint64_t siphash24(std::uint64_t k0, std::uint64_t k1, std::string_view message);

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Small deterministic stream addressed by (key, counter). Every photosite
/// gets its own stream keyed by (seed, site index), so draws do not depend on
/// evaluation order or thread count.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t counter) noexcept
        : state_(mix64(seed ^ mix64(counter + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open_low() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (one variate per call, the pair's
    /// second half is discarded to keep the stream position simple).
    double normal() noexcept;

private:
    std::uint64_t state_;
};

/// Poisson variate with the given mean. Exact inversion for mean < 30,
/// Normal(mean, sqrt(mean)) clipped at zero above that.
double sample_poisson(double mean, CounterRng& rng) noexcept;

inline constexpr double kPoissonNormalThreshold = 30.0;

} // namespace sensorfx
